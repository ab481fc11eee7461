"""Run CLI commands and validate their JSON output against the shipped schemas."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name.split(".")[0]: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}

tmp = pathlib.Path(tempfile.mkdtemp())
parity = tmp / "h.json"
parity.write_text(json.dumps({"rows": 2, "cols": 5, "data": [1, 2, 0, "1/2", 3, 0, 1, 1, -1, 2]}))
zero_col = tmp / "z.json"
zero_col.write_text(json.dumps({"rows": 1, "cols": 3, "data": [1, 0, 1]}))
for f in (parity, zero_col):
    jsonschema.validate(json.loads(f.read_text()), schemas["matrix"])

cases = [
    ("height_report", ["h1", "--construct", "problem-b", "--n", "8"]),
    ("height_report", ["h1", "--construct", "block", "--n", "9", "--k", "6", "--mode", "rational", "--cross-check"]),
    ("height_report", ["h1", "--parity", str(parity), "--cross-check"]),
    ("height_report", ["h1", "--parity", str(zero_col), "--mode", "rational"]),
    ("height_report", ["h1", "--construct", "random", "--n", "7", "--k", "3", "--seed", "5", "--method", "primal"]),
    ("campaign_report", ["verify", "bounds", "--n", "6", "--k", "4", "--trials", "20"]),
    ("campaign_report", ["verify", "trace", "--trials", "50"]),
    ("campaign_report", ["verify", "tightness", "--max-n", "9"]),
    ("campaign_report", ["verify", "decoder", "--trials", "50"]),
    ("campaign_report", ["verify", "certificates", "--max-n", "8"]),
    ("campaign_report", ["verify", "oracles", "--max-n", "8", "--random", "10"]),
    ("campaign_report", ["abft", "run", "--trials", "50", "--clean-trials", "50"]),
    ("abft_demo", ["abft", "demo", "--m", "4", "--l", "4", "--n", "4", "--parts", "2", "--format", "json"]),
]

failed = 0
for schema, args in cases:
    proc = subprocess.run([cli, *args], capture_output=True, text=True)
    try:
        if proc.returncode != 0:
            raise RuntimeError(f"exit {proc.returncode}: {proc.stderr.strip()}")
        jsonschema.validate(json.loads(proc.stdout), schemas[schema])
        print(f"ok   {schema:16} {' '.join(args)}")
    except Exception as exc:  # noqa: BLE001
        failed += 1
        print(f"FAIL {schema:16} {' '.join(args)}: {exc}")
sys.exit(1 if failed else 0)
