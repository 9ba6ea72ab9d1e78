#!/usr/bin/env python3
"""Rewrites golden/*.json from the current dqtool. Review the diff before committing."""
import json
import pathlib
import subprocess
import sys

here = pathlib.Path(__file__).resolve().parent
tool = sys.argv[1] if len(sys.argv) > 1 else str(here.parents[1] / "build" / "tools" / "dqtool")

for case in json.loads((here / "cases.json").read_text()):
    ws = here / "workspaces" / (case["workspace"] + ".json")
    run = subprocess.run([tool, case["command"], "--workspace", str(ws), *case["args"]],
                         capture_output=True, text=True)
    if run.returncode != case["exit"]:
        sys.exit(f"{case['workspace']}: exit {run.returncode}, expected {case['exit']}")
    (here / "golden" / (case["workspace"] + ".json")).write_text(run.stdout)
