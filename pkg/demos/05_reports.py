"""
Reproducing the tables from the command line
============================================

Every CLI command prints a JSON report. This script runs the commands that
regenerate the counts and group orders, and checks that reports are
deterministic apart from timing.
"""
import json
import subprocess
import sys

from benthad.io import strip_timing


def cli(*args):
    out = subprocess.run([sys.executable, "-m", "benthad", *args], capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


rows = []
for alias in ("s4", "s16", "symp16", "paley2-17"):
    r = cli("search", "--matrix", alias, "--method", "eigen")["results"]
    rows.append((alias, r["v"], r["k"], r["count"]))
print(f"{'matrix':10s} {'v':>3s} {'k':>3s} {'count':>6s}")
for alias, v, k, count in rows:
    print(f"{alias:10s} {v:3d} {k:3d} {count:6d}")

for alias in ("s16", "symp16", "paley2-17"):
    orders = {cmd: cli(cmd, "--matrix", alias)["results"]["order_factored"] for cmd in ("saut", "cgroup", "aut")}
    print(alias, orders)

a = cli("search", "--matrix", "paley2-17")
b = cli("search", "--matrix", "paley2-17")
print("deterministic modulo elapsed_ms:", strip_timing(a) == strip_timing(b))
