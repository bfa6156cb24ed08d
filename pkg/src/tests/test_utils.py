import math
import tomllib
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from errors import AngleParseError, ConfigError
from utils.utils import clamp, format_float, parse_angle, parse_grid


@pytest.mark.parametrize(
    "text, value",
    [
        ("pi/4", math.pi / 4),
        ("pi/2", math.pi / 2),
        ("-pi/2", -math.pi / 2),
        ("3pi/4", 3 * math.pi / 4),
        ("3*pi/4", 3 * math.pi / 4),
        ("PI", math.pi),
        ("0", 0.0),
        ("0.7853981633974483", 0.7853981633974483),
        (1.25, 1.25),
    ],
)
def test_parse_angle(text, value):
    assert parse_angle(text) == value


@pytest.mark.parametrize("text", ["tau/4", "pi/0", "", "nan", "inf", "pi/4/2"])
def test_parse_angle_rejects(text):
    with pytest.raises(AngleParseError):
        parse_angle(text)


def test_parse_grid_range_pins_both_ends():
    grid = parse_grid("0:pi/2:33")
    assert len(grid) == 33
    assert grid[0] == 0.0
    assert grid[-1] == math.pi / 2
    assert grid[16] == pytest.approx(math.pi / 4, abs=1e-15)


def test_parse_grid_list():
    assert parse_grid("0, pi/4,pi/2") == [0.0, math.pi / 4, math.pi / 2]


@pytest.mark.parametrize("text", ["0:1", "0:1:x", "0:1:0", " , "])
def test_parse_grid_rejects(text):
    with pytest.raises(ConfigError):
        parse_grid(text)


@given(st.floats(allow_nan=False, allow_infinity=False))
def test_format_float_is_exact(value):
    assert float(format_float(value)) == value


def test_format_float_drops_negative_zero():
    assert format_float(-0.0) == "0"


def test_clamp():
    assert clamp(1.5, 0.0, 1.0) == 1.0
    assert clamp(-0.5, 0.0, 1.0) == 0.0
    assert clamp(0.25, 0.0, 1.0) == 0.25


def test_utils_is_an_installable_package():
    import utils

    root = Path(__file__).resolve().parents[2]
    assert Path(utils.__file__).name == "__init__.py"

    project = tomllib.loads((root / "pyproject.toml").read_text())
    runtime = [dep.split(">")[0].split("=")[0] for dep in project["project"]["dependencies"]]
    assert "snakeviz" not in runtime
    assert any(dep.startswith("snakeviz") for dep in project["dependency-groups"]["dev"])
