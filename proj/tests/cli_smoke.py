"""Runs the psifrac executable end to end."""
import csv
import io
import math
import subprocess
import sys
import tempfile

exe = sys.argv[1]


def run(*args, ok=True):
    p = subprocess.run([exe, *args], capture_output=True, text=True)
    if ok and p.returncode != 0:
        raise SystemExit(f"{args} failed: {p.stderr}")
    return p


out = run("ml", "--alpha", "1", "--beta", "1", "--z", "1").stdout
assert abs(float(out.splitlines()[1].split(",")[0]) - math.e) < 1e-14, out

rows = list(csv.DictReader(io.StringIO(run("op", "--kind", "integral", "--mu", "0.5", "--n", "64").stdout)))
assert len(rows) == 65
assert abs(float(rows[-1]["value"]) - 1 / math.gamma(1.5)) < 1e-12

bad = run("nope", ok=False)
assert bad.returncode != 0 and bad.stderr.startswith("error: usage:")

with tempfile.TemporaryDirectory() as d:
    run("figures", "--out-dir", d)
    with open(f"{d}/fig1.csv", newline="") as fh:
        data = list(csv.reader(fh))
    assert data[0][0] == "x" and len(data) == 201
print("cli smoke ok")
