"""Regenerate the shipped preset JSON files for the blow-ups M2..M6.

The tables are the known quantum multiplication tables for the
monotone blow-ups of CP^2; M2T is the group-ring table for M2.  Run from
the repository root:

    python3 tools/gen_presets.py
"""

import json
import re
from pathlib import Path

OUT = Path(__file__).resolve().parent.parent / "src" / "qhlag" / "data" / "presets"


def lin(text):
    """'3H-E1-E2' -> {'H': 3, 'E1': -1, 'E2': -1}"""
    out = {}
    for sign, coeff, name in re.findall(r"([+-]?)(\d*)([A-Za-z]\w*)", text.replace(" ", "")):
        c = int(coeff or 1) * (-1 if sign == "-" else 1)
        out[name] = out.get(name, 0) + c
    return out


def q_terms(*parts):
    """parts: (q_power, combination) pairs -> result list."""
    result = []
    for k, combo in parts:
        combo = lin(combo) if isinstance(combo, str) else combo
        for name, c in combo.items():
            if c:
                result.append({"class": name, "coeff": c, "monomial": {"q": k}})
    return result


def es(k, skip=()):
    return [f"E{i}" for i in range(1, k + 1) if i not in skip]


def combo(h=0, e=None, k=0, u=0, p=0):
    """Build a class combination; e maps index -> coeff (default 0)."""
    out = {}
    if p:
        out["p"] = p
    if h:
        out["H"] = h
    for i in range(1, k + 1):
        c = (e or {}).get(i, 0)
        if c:
            out[f"E{i}"] = c
    if u:
        out["u"] = u
    return out


def header(k, table, notes=()):
    basis = [{"name": "p", "degree": 0}, {"name": "H", "degree": 2}]
    basis += [{"name": e, "degree": 2} for e in es(k)]
    basis.append({"name": "u", "degree": 4})
    names = [b["name"] for b in basis]
    unit_rows = [{"left": "u", "right": n, "result": [{"class": n, "coeff": 1,
                                                       "monomial": {"q": 0}}]}
                 for n in names]
    return {
        "name": f"M{k}",
        "dimension": 4,
        "minimal_chern": 1,
        "coefficient_mode": "q",
        "basis": basis,
        "unit": "u",
        "point": "p",
        "c1_dual": "3H" + "".join(f"-{e}" for e in es(k)),
        "notes": list(notes),
        "table": unit_rows + table,
    }


def entry(left, right, result):
    return {"left": left, "right": right, "result": result}


def m2():
    t = [
        entry("p", "p", q_terms((3, "H"), (4, "u"))),
        entry("p", "H", q_terms((2, "2H-E1-E2"), (3, "u"))),
        entry("p", "E1", q_terms((2, "H-E1"))),
        entry("p", "E2", q_terms((2, "H-E2"))),
        entry("H", "H", q_terms((0, "p"), (1, "H-E1-E2"), (2, "2u"))),
        entry("H", "E1", q_terms((1, "H-E1-E2"), (2, "u"))),
        entry("H", "E2", q_terms((1, "H-E1-E2"), (2, "u"))),
        entry("E1", "E2", q_terms((1, "H-E1-E2"))),
        entry("E1", "E1", q_terms((0, "-p"), (1, "H-E2"), (2, "u"))),
        entry("E2", "E2", q_terms((0, "-p"), (1, "H-E1"), (2, "u"))),
    ]
    return header(2, t)


def m3():
    k = 3
    sum_e = {i: -1 for i in range(1, k + 1)}
    t = [
        entry("p", "p", q_terms((3, combo(3, sum_e, k)), (4, "3u"))),
        entry("p", "H", q_terms((2, combo(3, sum_e, k)), (3, "3u"))),
        entry("H", "H", q_terms((0, "p"), (1, combo(3, {i: -2 for i in range(1, 4)}, k)),
                                (2, "3u"))),
    ]
    for i in range(1, k + 1):
        t.append(entry("p", f"E{i}", q_terms((2, combo(1, {i: -1}, k)), (3, "u"))))
        e = {j: -1 for j in range(1, k + 1)}
        e[i] = -2
        t.append(entry("H", f"E{i}", q_terms((1, combo(2, e, k)), (2, "u"))))
        t.append(entry(f"E{i}", f"E{i}",
                       q_terms((0, "-p"), (1, combo(2, sum_e, k)), (2, "u"))))
        for j in range(i + 1, k + 1):
            t.append(entry(f"E{i}", f"E{j}", q_terms((1, combo(1, {i: -1, j: -1}, k)))))
    return header(3, t, ["the source writes t for q in some M3 identities; q is used throughout"])


# (H coeff, E coeff | u coeff) for the symmetric entries, and
# (H coeff, own E coeff, other E coeff | u coeff) for the E-dependent ones.
PATTERNS = {
    4: dict(pp=(9, 3, 10), pH=(8, 3, 9), pE=(3, 2, 1, 3), HH=(6, 3, 8),
            HE=(3, 3, 1, 3), EE=(3, 2, 1, 2), EiEj=(1, 1, 0, 1)),
    5: dict(pp=(36, 12, 52), pH=(25, 9, 36), pE=(9, 5, 3, 12), HH=(18, 8, 25),
            HE=(8, 6, 3, 9), EE=(6, 4, 2, 5), EiEj=(3, 2, 1, 3)),
    6: dict(pp=(252, 84, 540), pH=(120, 42, 252), pE=(42, 20, 14, 84), HH=(63, 25, 120),
            HE=(25, 15, 9, 42), EE=(15, 9, 5, 20), EiEj=(9, 5, 3, 14)),
}


def mk(k):
    c = PATTERNS[k]
    allE = lambda v: {i: -v for i in range(1, k + 1)}  # noqa: E731

    def own(h, mine, other, idx):
        e = {i: -other for i in range(1, k + 1)}
        for i in idx:
            e[i] = -mine
        return combo(h, e, k)

    t = [
        entry("p", "p", q_terms((3, combo(c["pp"][0], allE(c["pp"][1]), k)),
                                (4, {"u": c["pp"][2]}))),
        entry("p", "H", q_terms((2, combo(c["pH"][0], allE(c["pH"][1]), k)),
                                (3, {"u": c["pH"][2]}))),
        entry("H", "H", q_terms((0, "p"), (1, combo(c["HH"][0], allE(c["HH"][1]), k)),
                                (2, {"u": c["HH"][2]}))),
    ]
    for i in range(1, k + 1):
        h, a, b, uu = c["pE"]
        t.append(entry("p", f"E{i}", q_terms((2, own(h, a, b, [i])), (3, {"u": uu}))))
        h, a, b, uu = c["HE"]
        t.append(entry("H", f"E{i}", q_terms((1, own(h, a, b, [i])), (2, {"u": uu}))))
        h, a, b, uu = c["EE"]
        t.append(entry(f"E{i}", f"E{i}",
                       q_terms((0, "-p"), (1, own(h, a, b, [i])), (2, {"u": uu}))))
        for j in range(i + 1, k + 1):
            h, a, b, uu = c["EiEj"]
            t.append(entry(f"E{i}", f"E{j}",
                           q_terms((1, own(h, a, b, [i, j])), (2, {"u": uu}))))
    notes = []
    if k == 6:
        notes.append("source sums over E_j in the E_i*E_j entry; E_k (k != i,j) is meant")
    return header(k, t, notes)


def m2t():
    # H2 basis order: H, E1, E2; <c1, .> = 3, 1, 1.
    def g(cls, vec, coeff=1):
        return {"class": cls, "coeff": coeff, "monomial": {"T": list(vec)}}

    H, E1, E2 = (1, 0, 0), (0, 1, 0), (0, 0, 1)
    add = lambda *vs: tuple(sum(x) for x in zip(*vs))  # noqa: E731
    neg = lambda v: tuple(-x for x in v)  # noqa: E731
    HmE1 = add(H, neg(E1))
    HmE2 = add(H, neg(E2))
    HmE12 = add(H, neg(E1), neg(E2))

    def spread(cls_combo, vec):
        return [g(n, vec, c) for n, c in lin(cls_combo).items()]

    names = ["p", "H", "E1", "E2", "u"]
    zero = (0, 0, 0)
    t = [entry("u", n, [g(n, zero)]) for n in names]
    t += [
        entry("p", "p", [g("H", H), g("u", add(H, H, neg(E1), neg(E2)))]),
        entry("p", "H", spread("H-E1", HmE1) + spread("H-E2", HmE2) + [g("u", H)]),
        entry("p", "E1", spread("H-E1", HmE1)),
        entry("p", "E2", spread("H-E2", HmE2)),
        entry("H", "H", [g("p", zero)] + spread("H-E1-E2", HmE12)
              + [g("u", HmE1), g("u", HmE2)]),
        entry("H", "E1", spread("H-E1-E2", HmE12) + [g("u", HmE1)]),
        entry("H", "E2", spread("H-E1-E2", HmE12) + [g("u", HmE2)]),
        entry("E1", "E1", [g("p", zero, -1)] + spread("H-E1-E2", HmE12)
              + [g("E1", E1), g("u", HmE1)]),
        entry("E2", "E2", [g("p", zero, -1)] + spread("H-E1-E2", HmE12)
              + [g("E2", E2), g("u", HmE2)]),
        entry("E1", "E2", spread("H-E1-E2", HmE12)),
    ]
    return {
        "name": "M2T",
        "dimension": 4,
        "minimal_chern": 1,
        "coefficient_mode": {"group_ring": {"h2_basis": ["H", "E1", "E2"],
                                            "c1_pairing": [3, 1, 1]}},
        "basis": [{"name": n, "degree": d} for n, d in
                  zip(names, [0, 2, 2, 2, 4])],
        "unit": "u",
        "point": "p",
        "c1_dual": "3H-E1-E2",
        "notes": ["ambient group-ring coefficients S^A, A in H2(M2)"],
        "table": t,
    }


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    docs = {"M2": m2(), "M3": m3(), "M4": mk(4), "M5": mk(5), "M6": mk(6), "M2T": m2t()}
    for name, doc in docs.items():
        (OUT / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")
        print(f"wrote {name}.json ({len(doc['table'])} entries)")


if __name__ == "__main__":
    main()
