"""Regenerate the golden reports shipped with ``flagflow selftest``.

Each golden file is a list of ``{"name", "scenario", "expected"}`` records.
Before anything is written, the anchor values below (worked out by hand for
the A2 full flag) are checked against the fresh reports, so a regression in
the library cannot silently become the new golden truth.

    python scripts/regen_golden.py          # rewrite the files
    python scripts/regen_golden.py --check  # only compare, exit 1 on drift
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from flagflow.runner import render_json, run
from flagflow.scenario import parse_scenario

GOLDEN = Path(__file__).resolve().parents[1] / "src" / "flagflow" / "data" / "golden"
A2 = {"family": "A", "rank": 2}


def theorem_a(lam, k, fibers, queries):
    return {"root_type": A2, "parabolic": [], "lambda": lam, "shape": "theorem_a",
            "k": k, "fibers": fibers, "queries": queries}


def theorem_b(lam, fibers, queries):
    return {"root_type": A2, "parabolic": [], "lambda": lam, "shape": "theorem_b",
            "fibers": fibers, "queries": queries}


def q(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def cases():
    c1 = [
        ("a2_full_flag", {"root_type": A2, "parabolic": [], "lambda": "1",
                          "queries": [{"kind": "describe"}, {"kind": "pic0"}]}),
        ("p2", {"root_type": A2, "parabolic": [2], "lambda": "1",
                "queries": [{"kind": "describe"}]}),
    ]

    c2 = []
    for lam, k, s in [("1", 2, "0"), ("3", 2, "1"), ("5/2", 3, "-7/3"), ("1", -4, "1/2")]:
        c2.append((f"tflat_l{lam}_k{k}_s{s}".replace("/", "_"), theorem_a(lam, k, [[-1, 1]], [
            {"kind": "tflat", "s": s},
            {"kind": "flat_time", "t": "-1"},
            {"kind": "flat_time", "t": "0"},
        ])))

    c3 = [
        ("theorem_b_all_t", theorem_b("1", [[-1, 1], [-2, 2]], [
            {"kind": "ode_check", "t": t, "s": "-1/3", "h": "1/7"}
            for t in ("-2", "-1", "0", "1/2", "1", "3")
        ])),
        ("theorem_a_chern_and_bismut", theorem_a("1", 2, [[-1, 1]], [
            {"kind": "ode_check", "t": "1", "s": "0", "h": "1/2"},
            {"kind": "ode_check", "t": "-1", "s": "0", "h": "1/2"},
            {"kind": "flow", "s": "0", "t": "-1"},
        ])),
    ]

    c4 = [
        ("e_ab", theorem_b("1", [[-1, 1], [-2, 2]], [
            {"kind": "balanced", "s": s} for s in ("-5", "0", "1/2", "99/100")
        ] + [{"kind": "pluriclosed_report", "samples": ["0", "1/2"]}])),
        ("t4_theorem_b", theorem_b("1", [[-1, 1], [-1, 1], [-2, 2], [-2, 2]], [
            {"kind": "balanced", "s": "1/3"},
        ])),
        ("theorem_a_not_balanced", theorem_a("1", 2, [[-1, 1]], [
            {"kind": "balanced", "s": "0"}, {"kind": "cy_check"},
        ])),
    ]

    c5 = [
        ("e_1_2", theorem_b("1", [[-1, 1], [-2, 2]], [{"kind": "holonomy"}, {"kind": "gh_limit"}])),
        ("e_k2_l1", theorem_a("1", 2, [[-1, 1]], [{"kind": "holonomy"}, {"kind": "gh_limit"}])),
        ("zero_curvature", theorem_b("1", [[0, 0], [0, 0]], [{"kind": "holonomy"}, {"kind": "gh_limit"}])),
    ]
    return {
        "c1_flag_fixture.json": c1,
        "c2_tflat.json": c2,
        "c3_flow_ode.json": c3,
        "c4_balanced.json": c4,
        "c5_holonomy.json": c5,
    }


def values(report, kind):
    return [r["value"] for r in report["results"] if r["kind"] == kind]


def check_anchors(name, case, report):
    """Hand-derived values each golden must contain."""
    if case.get("shape") == "theorem_a" and name.startswith("tflat"):
        lam, k = Fraction(case["lambda"]), case["k"]
        s = Fraction(case["queries"][0]["s"])
        assert values(report, "tflat") == [q(1 - Fraction(8, 3) * (lam - s) / k**2)]
        assert values(report, "flat_time") == [q(lam - Fraction(3, 4) * k**2), q(lam - Fraction(3, 8) * k**2)]
    if name == "a2_full_flag":
        d = values(report, "describe")[0]
        assert d["cartan"] == [["2", "-1"], ["-1", "2"]]
        assert d["positive_roots"] == [["1", "0"], ["0", "1"], ["1", "1"]]
        assert d["delta_p"] == ["2", "2"] and d["fano_index"] == "2"
        assert d["ke_weight"] == ["2", "2"] and d["degree_functional"] == ["3/4", "3/4"]
        assert values(report, "pic0") == [[["-1", "1"]]]
    if name == "p2":
        d = values(report, "describe")[0]
        assert d["delta_p"] == ["3", "0"] and d["fano_index"] == "3" and d["dim_complex"] == "2"
    if name == "theorem_b_all_t":
        assert all(v["zero"] for v in values(report, "ode_check"))
    if name == "theorem_a_chern_and_bismut":
        chern, bismut = values(report, "ode_check")
        # residual = (c - 1) delta_P with c - 1 = -k^2 dim / (lam I^2) = -3
        assert chern["zero"] and bismut["residual"] == ["-6", "-6"]
    if name in ("e_ab", "t4_theorem_b"):
        assert all(v["balanced"] for v in values(report, "balanced"))
    if name == "theorem_a_not_balanced":
        cert = values(report, "balanced")[0]
        assert not cert["balanced"] and cert["traces"][0] == "3"
    if name == "e_1_2":
        assert values(report, "holonomy")[0]["matrix"] == [["-1", "1", "0"], ["-2", "2", "0"]]
        assert values(report, "gh_limit")[0]["limit"] == "S^1"
    if name == "e_k2_l1":
        assert values(report, "holonomy")[0]["matrix"] == [["2", "2", "4"], ["-1", "1", "0"]]
        assert values(report, "gh_limit")[0]["limit"] == "point"
    if name == "zero_curvature":
        assert values(report, "gh_limit")[0]["limit"] == "T^2"


def build():
    out = {}
    for fname, items in cases().items():
        records = []
        for name, scenario in items:
            report = json.loads(render_json(run(parse_scenario(json.dumps(scenario)))))
            check_anchors(name, scenario, report)
            records.append({"name": name, "scenario": scenario, "expected": report})
        out[fname] = json.dumps(records, indent=2, ensure_ascii=False) + "\n"
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--check", action="store_true")
    args = ap.parse_args()
    drift = False
    for fname, text in build().items():
        path = GOLDEN / fname
        if args.check:
            same = path.exists() and path.read_text(encoding="utf-8") == text
            drift |= not same
            print(f"{'ok   ' if same else 'DRIFT'} {fname}")
        else:
            path.write_text(text, encoding="utf-8")
            print(f"wrote {path}")
    return 1 if drift else 0


if __name__ == "__main__":
    sys.exit(main())
