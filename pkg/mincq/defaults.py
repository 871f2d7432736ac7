"""Global default configuration values."""
from os import path, getcwd

# Base Config
base_dir = path.abspath(getcwd())
config_file = "mincq.yaml"

# Conjugator Config
conjugator = {
    "budget": 64,  # number of ladder seeds tried before SearchExhausted
}

# Sylvester Config
sylvester = {
    "atol": 1e-12,  # zero test on the floating path
    "svd_rtol": 1e-10,  # numeric rank cross-check
    "eig_rtol": 1e-9,
}

# Surface Config
surface = {
    "part": "re",  # re | im
    "convention": "rder",  # rder: Phi = X_u - I X_v; corner: Phi = (X_u - I X_v) / 2
    "base_point": [0, 0, 0],
    "z0": None,  # basepoint of the integral, default: no offset
    "domain": [-1.0, 1.0, -1.0, 1.0],  # u0, u1, v0, v1
    "grid": [21, 21],
    "atol": 1e-12,  # degenerate normal threshold on |X_u x X_v|
    "residual_atol": 1e-8,  # X_uu + X_vv = 2 E H N
    "fd_step": 1e-6,  # central differences: Phi' on numeric surfaces, the derivative check
    "fd_check": False,  # geometry_report compares second partials with central differences
    "fd_rtol": 1e-5,
    "numeric_epsabs": 1e-12,
}

# PH Curve Config
phcurve = {
    "samples": 101,
    "interval": [0.0, 1.0],
}

# Patch Config
patch = {
    "grid": [21, 21],
}

# Verify Config
verify = {
    "domain": [0.5, 1.5, 0.5, 1.5],
    "grid": [5, 5],
    "h_atol": 1e-8,
    "isothermal_rtol": 1e-9,
}

# Output Config
output = {
    "directory": "./mincq_output",
    "float_format": "%.12g",
}
