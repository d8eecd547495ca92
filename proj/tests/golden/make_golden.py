"""Regenerate the CLI golden transcripts: python3 make_golden.py path/to/szlenk

Review every diff by hand before committing regenerated outputs."""

import pathlib
import subprocess
import sys

CASES = [
    ("01_eval", ["eval", "w^(w^2)*3 + w*5 + 7"]),
    ("02_bounds", ["bounds", "c0(w^w, C0(w))"]),
    ("03_eval_pow", ["eval", "(w+1)^2"]),
    ("04_eval_syntax_error", ["eval", "w^^2"]),
    ("05_eval_overflow", ["eval", "18446744073709551616"]),
    ("06_cmp", ["cmp", "w*2", "w + 5"]),
    ("07_sz", ["sz", "w^(w^2)*7 + w^3"]),
    ("08_sz_uncountable", ["sz", "W1*w"]),
    ("09_dz", ["dz", "w"]),
    ("10_dz_finite", ["dz", "4"]),
    ("11_gamma", ["gamma", "w^(w^2 + w*3)"]),
    ("12_report", ["report", "w^w*5 + w*2"]),
    ("13_report_json", ["--json", "report", "4"]),
    ("14_iso", ["iso", "w", "w*2"]),
    ("15_iso_not", ["iso", "w^w", "w^(w^2)"]),
    ("16_iso_uncountable", ["iso", "w", "W1"]),
    ("17_rep", ["rep", "w^(w*3 + 1)*2"]),
    ("18_cb_stage", ["cb", "w^2*3 + w*2 + 5", "--stage", "1"]),
    ("19_cb_height", ["cb", "w^(w^2)", "--height"]),
    ("20_dirac", ["dirac", "w^3 + w^2*2"]),
    ("21_decompose", ["decompose", "w^2", "w"]),
    ("22_decompose_bad", ["decompose", "w", "w^2"]),
    ("23_normalize_trace", ["normalize-space", "--trace", "C0(w^(w*3))"]),
    ("24_normalize_json", ["--json", "normalize-space", "--trace", "C0(w^(w*2))"]),
    ("25_unknown_command", ["frobnicate", "w"]),
]


def main():
    exe = sys.argv[1]
    here = pathlib.Path(__file__).parent
    for name, args in CASES:
        r = subprocess.run([exe, *args], capture_output=True)
        (here / f"{name}.cmd").write_text("".join(a + "\n" for a in args))
        (here / f"{name}.stdout").write_bytes(r.stdout)
        (here / f"{name}.stderr").write_bytes(r.stderr)
        (here / f"{name}.exit").write_text(f"{r.returncode}\n")


if __name__ == "__main__":
    main()
