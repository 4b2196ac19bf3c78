#!/usr/bin/env python3
"""End-to-end checks for the command-line tool: exit codes, file outputs,
round-trip verification, tamper detection, and byte-identical reruns."""

import json
import pathlib
import subprocess
import sys
import tempfile

CLI = pathlib.Path(sys.argv[1]).resolve()
FAILURES = []


def run(*args, expect=0):
    proc = subprocess.run([str(CLI), *args], capture_output=True, text=True)
    if proc.returncode != expect:
        FAILURES.append(
            f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n"
            f"stdout: {proc.stdout[-400:]}\nstderr: {proc.stderr[-400:]}"
        )
    return proc


def check(cond, label):
    if not cond:
        FAILURES.append(label)


def main():
    with tempfile.TemporaryDirectory() as tmp:
        tmp = pathlib.Path(tmp)

        run("generate", "--p", "2", "--a", "1", "--out", str(tmp / "run1"))
        for name in ("generator.json", "mub_family.json", "summary.txt"):
            check((tmp / "run1" / name).exists(), f"missing {name}")

        run("verify", str(tmp / "run1" / "generator.json"))
        run("verify", str(tmp / "run1" / "mub_family.json"))

        # Determinism: a second run produces byte-identical exact JSON.
        run("generate", "--p", "2", "--a", "1", "--out", str(tmp / "run2"))
        for name in ("generator.json", "mub_family.json"):
            a = (tmp / "run1" / name).read_bytes()
            b = (tmp / "run2" / name).read_bytes()
            check(a == b, f"reruns differ in {name}")

        # Odd characteristic: half family, and the file re-verifies.
        run("generate", "--p", "3", "--a", "1", "--out", str(tmp / "run3"))
        fam = json.loads((tmp / "run3" / "mub_family.json").read_text())
        check(fam["family"] == "half", "q=3 family should be half")
        check(fam["count"] == 2, "q=3 family should have 2 bases")
        run("verify", str(tmp / "run3" / "mub_family.json"))

        # Error paths.
        run("generate", "--p", "4", "--a", "1", expect=2)
        run("generate", "--p", "2", "--a", "6", expect=3)
        run("verify", str(tmp / "does_not_exist.json"), expect=2)
        run("lie", "--p", "3", "--a", "1", expect=2)

        # Tamper detection: perturb one matrix entry.
        damaged = json.loads((tmp / "run1" / "mub_family.json").read_text())
        damaged["bases"][1]["entries"][0][0]["coeffs"][0][0] = "9"
        (tmp / "tampered.json").write_text(json.dumps(damaged))
        run("verify", str(tmp / "tampered.json"), expect=1)

        # Float export variant.
        run("generate", "--p", "2", "--a", "2", "--out", str(tmp / "runf"),
            "--format", "float-json")
        check((tmp / "runf" / "mub_family.float.json").exists(),
              "missing float export")

        # Fixtures: run, export, and re-verify the exported files.
        run("fixtures", "--out", str(tmp / "fx"))
        run("verify", str(tmp / "fx" / "fixture_q2.json"))
        run("verify", str(tmp / "fx" / "fixture_real4.json"))

        # Lie decompositions at q = 4, then re-verify both artifacts.
        run("lie", "--p", "2", "--a", "2", "--out", str(tmp / "lie4"))
        run("verify", str(tmp / "lie4" / "sl_decomp.json"))
        run("verify", str(tmp / "lie4" / "sp_decomp.json"))

        # Odd-p profile mode is report-only.
        run("lie", "--p", "3", "--a", "1", "--profile", "--out", str(tmp / "lie3"))
        check((tmp / "lie3" / "lie_profile.json").exists(), "missing lie profile")

        # Flatness profile subcommand.
        run("profile", "--p", "3", "--a", "1", "--out", str(tmp / "prof"))
        prof = json.loads((tmp / "prof" / "flatness_profile.json").read_text())
        check(len(prof["records"]) == 4, "q=3 profile should list 4 powers")
        check(prof["records"][1]["diagonal_flat"] is False,
              "q=3 involution should not have a flat diagonal")

    if FAILURES:
        print("CLI end-to-end failures:")
        for f in FAILURES:
            print(" -", f)
        sys.exit(1)
    print("CLI end-to-end checks passed")


if __name__ == "__main__":
    main()
