from __future__ import annotations

import os
import sys
from pathlib import Path

import yaml

__doc__ = """
Load or create the project's config.yaml and expose the settings and
artifact directories the command line uses.
"""


PROJECT_ROOT = Path(__file__).resolve().parents[2]
CONFIG_FILE_PATH = PROJECT_ROOT / "config.yaml"

DEFAULT_CONFIG = {
    "artifacts_directory": "artifacts",
    "default_seed": 7,
    "default_trials": 500,
    "threads": 1,
    "float_diagnostics_threshold": 1000,
}

if not CONFIG_FILE_PATH.exists():
    print(
        f"Config file not found. Creating default config.yaml at {CONFIG_FILE_PATH}",
        file=sys.stderr,
    )
    with open(CONFIG_FILE_PATH, "w") as f:
        yaml.dump(DEFAULT_CONFIG, f, default_flow_style=False, sort_keys=False)

with open(CONFIG_FILE_PATH) as f:
    _config = {**DEFAULT_CONFIG, **(yaml.safe_load(f) or {})}

# Harness Defaults
DEFAULT_SEED = int(_config["default_seed"])
DEFAULT_TRIALS = int(_config["default_trials"])
FLOAT_DIAGNOSTICS_THRESHOLD = int(_config["float_diagnostics_threshold"])
THREADS = max(1, int(os.environ.get("RIESZSUP_THREADS", _config["threads"])))

# Output Artifact Directories (created on demand)
ARTIFACTS_DIR = PROJECT_ROOT / _config["artifacts_directory"]
CHECK_REPORTS_DIR = ARTIFACTS_DIR / "check_reports"
