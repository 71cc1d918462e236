"""Runs the CLI and validates its JSON against the published schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.stem: json.loads(p.read_text()) for p in (root / "schema").glob("*.json")}
models = sorted((root / "models").glob("*.json"))


def run(*args, ok=(0,)):
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    assert proc.returncode in ok, (args, proc.returncode, proc.stderr)
    return json.loads(proc.stdout)


for model in models:
    jsonschema.validate(json.loads(model.read_text()), schemas["model-spec.schema"])
    jsonschema.validate(run("report", str(model), "--exact"), schemas["bound-report.schema"])
    jsonschema.validate(run("verify", str(model), ok=(0, 1)),
                        schemas["verification-report.schema"])
jsonschema.validate(run("report", str(root / "models" / "w1.json"), "--mc", "500", "3"),
                    schemas["bound-report.schema"])
print(f"validated {len(models)} models and their reports")
