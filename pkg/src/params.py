"""
File: params.py
Description: Default parameters and hard limits for quantum and classical walks.
"""

import math

MAX_STEPS = 30  # 2 * 30 + 3 = 63 sites, one memory bit per site in a 64-bit word
MEMORY_WORD_BITS = 64
NORM_TOLERANCE = 1e-12
ANGLE_TOLERANCE = 1e-12  # coupling_report angle equality
TRIG_SNAP_TOLERANCE = 1e-15  # relative, see operators.rotation
VARIANCE_FLOOR = 1e-12  # relative to the largest variance in a series
SAW_G_CAP = 46.0  # e^-46 ~ 1e-20, indistinguishable from a fully self-avoiding walk

# Exit codes for main.py
EXIT_OK = 0
EXIT_INVALID = 1
EXIT_USAGE = 2  # argparse
EXIT_PARSE = 3
EXIT_DEGENERATE = 4
EXIT_IO = 5

default_walk_params = {
    "theta_c": math.pi / 4,  # balanced coin
    "theta_b": 0.0,  # coin used on marked sites
    "theta_m": math.pi / 2,  # full memory flip on every visit
    "steps": 7,
    "input": "sym",
}

default_sweep_params = {
    "theta_c": math.pi / 4,
    "steps": 7,
    "input": "sym",
    "grid_m": "0:pi/2:33",
    "grid_b": "0:pi/2:33",
    "workers": 1,
}

default_saw_params = {
    "g": 0.0,
    "steps": 200,
    "replicates": 1000,
    "mod2": True,
    "seed": 7,
    # beta-vs-g curve
    "g_grid": "0,0.25,0.5,0.75,1,1.5,2,3,5,50",
    "workers": 1,
}

default_beta_curve_params = {
    "theta_c": math.pi / 4,
    "theta_m": math.pi / 2,
    "steps": 7,
    "input": "sym",
    "grid_b": "0:pi/4:9",
}
