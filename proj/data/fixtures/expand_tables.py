#!/usr/bin/env python3
"""Expand the closed-form type tables into per-row JSON fixtures.

Each output row carries a "source" string naming the table row or the
proposition it was transcribed from. Run from any directory; files are written
next to this script. Output is deterministic.
"""

import json
from fractions import Fraction
from math import gcd
from pathlib import Path

MAX_RANK = 12
DISAP_MAX_RANK = 10
HERE = Path(__file__).resolve().parent

CLASSICAL_MIN = {"A": 1, "B": 2, "C": 3, "D": 4}
EXCEPTIONAL = [("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)]


def systems(max_rank):
    for fam, lo in CLASSICAL_MIN.items():
        for rank in range(lo, max_rank + 1):
            yield fam, rank
    for fam, rank in EXCEPTIONAL:
        yield fam, rank


def label(fam, rank):
    return f"{fam}{rank}"


def canonical(fam, rank):
    if rank == 0:
        return "Empty"
    if fam in ("B", "C") and rank == 1:
        return "A1"
    if fam == "C" and rank == 2:
        return "B2"
    return label(fam, rank)


def cycles_text(cycles):
    cycles = [c for c in cycles if len(c) > 1]
    if not cycles:
        return "()"
    return "".join("(" + " ".join(str(x) for x in c) + ")" for c in cycles)


def pairs(lo, hi, l):
    """Transpositions (i l-i) for i = lo..hi."""
    return [(i, l - i) for i in range(lo, hi + 1)]


# Ω̂ and f ---------------------------------------------------------------

def omega_f_rows():
    src = "List of Omega-hat and f"
    rows = []
    for fam, l in systems(MAX_RANK):
        if fam == "A":
            group, f, tag = f"Z/{l + 1}Z", l + 1, "A_l (l >= 1)"
        elif fam == "B":
            group, f, tag = "Z/2Z", 2, "B_l (l >= 2)"
        elif fam == "C":
            group, f, tag = "Z/2Z", 2, "C_l (l >= 3)"
        elif fam == "D" and l % 2 == 0:
            group, f, tag = "Z/2Z x Z/2Z", 4, "D_l (l >= 4, even)"
        elif fam == "D":
            group, f, tag = "Z/4Z", 4, "D_l (l >= 5, odd)"
        else:
            tag = label(fam, l)
            group, f = {"E6": ("Z/3Z", 3), "E7": ("Z/2Z", 2)}.get(tag, ("1", 1))
        rows.append({"type": label(fam, l), "group": group, "order": f, "f": f,
                     "source": f"{src}, row {tag}"})
    return rows


# J and σ_j ----------------------------------------------------------------

def sigma_rows():
    src = "List of J and sigma_j"
    rows = []

    def add(t, J, j, cyc, tag):
        rows.append({"type": t, "J": J, "j": j, "cycles": cyc, "source": f"{src}, {tag}"})

    for fam, l in systems(MAX_RANK):
        t = label(fam, l)
        if fam == "A":
            J = list(range(l + 1))
            for j in J:
                images = [(i + j) % (l + 1) for i in range(l + 1)]
                seen, cyc = set(), []
                for s in range(l + 1):
                    if s in seen:
                        continue
                    c, x = [], s
                    while x not in seen:
                        seen.add(x)
                        c.append(x)
                        x = images[x]
                    cyc.append(c)
                add(t, J, j, cycles_text(cyc), "row A_l, sigma_j = (0 1 ... l)^j")
        elif fam == "B":
            J = [0, 1]
            add(t, J, 0, "()", "row B_l, identity for j = 0")
            add(t, J, 1, "(0 1)", "row B_l, sigma_1 = (0 1)")
        elif fam == "C":
            J = [0, l]
            add(t, J, 0, "()", "row C_l, identity for j = 0")
            cyc = [(0, l)] + pairs(1, (l - 1) // 2, l)
            add(t, J, l, cycles_text(cyc), "row C_l, sigma_l = (0 l) prod_{i=1}^{floor((l-1)/2)} (i l-i)")
        elif fam == "D":
            J = [0, 1, l - 1, l]
            add(t, J, 0, "()", "row D_l, identity for j = 0")
            add(t, J, 1, cycles_text([(0, 1), (l - 1, l)]), "row D_l, sigma_1 = (0 1)(l-1 l)")
            if l % 2 == 0:
                mid = pairs(2, l // 2 - 1, l)
                add(t, J, l - 1, cycles_text([(0, l - 1), (1, l)] + mid),
                    "row D_l (l even), sigma_{l-1} = (0 l-1)(1 l) prod_{i=2}^{l/2-1} (i l-i)")
                add(t, J, l, cycles_text([(0, l), (1, l - 1)] + mid),
                    "row D_l (l even), sigma_l = sigma_1 sigma_{l-1} = (0 l)(1 l-1) prod_{i=2}^{l/2-1} (i l-i)")
            else:
                mid = pairs(2, (l - 1) // 2, l)
                add(t, J, l - 1, cycles_text([(0, l - 1, 1, l)] + mid),
                    "row D_l (l odd), sigma_{l-1} = (0 l-1 1 l) prod_{i=2}^{(l-1)/2} (i l-i)")
                add(t, J, l, cycles_text([(0, l, 1, l - 1)] + mid),
                    "row D_l (l odd), sigma_l = (0 l 1 l-1) prod_{i=2}^{(l-1)/2} (i l-i)")
        elif t == "E6":
            J = [0, 1, 6]
            add(t, J, 0, "()", "row E_6, identity for j = 0")
            add(t, J, 1, "(0 1 6)(2 3 5)", "row E_6, sigma_1 = (0 1 6)(2 3 5)")
            add(t, J, 6, "(1 0 6)(2 5 3)", "row E_6, sigma_6 = sigma_1^{-1} = (1 0 6)(2 5 3)")
        elif t == "E7":
            J = [0, 7]
            add(t, J, 0, "()", "row E_7, identity for j = 0")
            add(t, J, 7, "(0 7)(1 6)(3 5)", "row E_7, sigma_7 = (0 7)(1 6)(3 5)")
        else:
            add(t, [0], 0, "()", f"row {t}, J = {{0}}")
    return rows


# Folded type and profiles ------------------------------------------------

def folding_cases(max_rank):
    """(type, j, folded label, profile classes, source tag) for every j in J \\ {0}."""
    for fam, l in systems(max_rank):
        t = label(fam, l)
        if fam == "A":
            for j in range(1, l + 1):
                g = gcd(l + 1, j)
                o = (l + 1) // g
                if g == 1:
                    yield t, j, "Empty", None, o, "row A_l, gcd(l+1, j) = 1"
                else:
                    vals = list(range(-(o - 1), o))
                    yield t, j, canonical("A", g - 1), {"all": vals}, o, "row A_l, g = gcd(l+1, j) != 1"
        elif fam == "B":
            if l == 2:
                yield t, 1, "A1", {"all": [-1, 0, 1]}, 2, "row B_2, j = 1"
            else:
                yield t, 1, canonical("B", l - 1), {"short": [-1, 0, 1], "long": [0]}, 2, "row B_l (l >= 3), j = 1"
        elif fam == "C":
            if l % 2:
                yield t, l, canonical("BC", (l - 1) // 2), {"all": [-1, 0, 1]}, 2, "row C_l (l >= 3, odd), j = l"
            else:
                yield t, l, canonical("C", l // 2), {"all": [-1, 0, 1]}, 2, "row C_l (l >= 4, even), j = l"
        elif fam == "D":
            yield t, 1, canonical("B", l - 2), {"short": [-1, 0, 1], "long": [0]}, 2, "row D_l (l >= 4), j = 1"
            for j in (l - 1, l):
                if l % 2 == 0:
                    yield (t, j, canonical("C", l // 2), {"short": [-1, 0, 1], "long": [0]}, 2,
                           "row D_l (l >= 4, even), j in {l-1, l}")
                else:
                    yield (t, j, canonical("BC", (l - 3) // 2),
                           {"short": [-3, -2, -1, 0, 1, 2, 3], "middle": [-2, 0, 2], "long": [-2, 0, 2]}, 4,
                           "row D_l (l >= 5, odd), j in {l-1, l}")
        elif t == "E6":
            for j in (1, 6):
                yield t, j, "G2", {"short": [-2, -1, 0, 1, 2], "long": [0]}, 3, "row E_6, j in {1, 6}"
        elif t == "E7":
            yield t, 7, "F4", {"short": [-1, 0, 1], "long": [0]}, 2, "row E_7, j = 7"


def table_p_rows():
    return [{"type": t, "j": j, "folded": folded, "source": f"List of type of the folded system, {tag}"}
            for t, j, folded, _, _, tag in folding_cases(MAX_RANK)]


def table_e_rows():
    rows = []
    for t, j, folded, classes, o, tag in folding_cases(MAX_RANK):
        zero = [p for p in range(-(o - 1), o) if p != 0]
        rows.append({"type": t, "j": j, "folded": folded, "classes": classes or {},
                     "zero": zero, "source": f"List of P(beta^omega), {tag}; P(0) from the summary proposition"})
    return rows


# Disappearing roots ------------------------------------------------------

def e(dim, *terms):
    v = [Fraction(0)] * dim
    for sign, idx in terms:
        v[idx - 1] += sign
    return v


def vec_text(v):
    return [str(Fraction(x)) for x in v]


def disap_rows():
    rows = []
    for fam, l in systems(DISAP_MAX_RANK):
        t = label(fam, l)
        if fam == "A":
            for j in range(1, l + 1):
                g = gcd(l + 1, j)
                roots = [e(l + 1, (1, p1), (-1, p2))
                         for p1 in range(1, l + 2) for p2 in range(p1 + 1, l + 2) if (p2 - p1) % g == 0]
                rows.append({"type": t, "j": j, "basis": "e", "roots": [vec_text(r) for r in roots],
                             "source": "disappearing roots of type A_l: e_p - e_q with q - p in g Z_{>0}"})
        elif fam == "B":
            rows.append({"type": t, "j": 1, "basis": "e", "roots": [vec_text(e(l, (1, 1)))],
                         "source": "disappearing roots of type B_l: {e_1}"})
        elif fam == "C":
            roots = [e(l, (1, p), (1, l - p + 1)) for p in range(1, (l + 1) // 2 + 1)]
            rows.append({"type": t, "j": l, "basis": "e", "roots": [vec_text(r) for r in roots],
                         "source": "disappearing roots of type C_l: e_p + e_{l-p+1}, p <= floor((l+1)/2)"})
        elif fam == "D":
            rows.append({"type": t, "j": 1, "basis": "e",
                         "roots": [vec_text(e(l, (1, 1), (-1, l))), vec_text(e(l, (1, 1), (1, l)))],
                         "source": "disappearing roots of type D_l, j = 1: e_1 - e_l, e_1 + e_l"})
            if l % 2 == 0:
                tail = [e(l, (1, i), (1, l - i + 1)) for i in range(2, l // 2 + 1)]
                rows.append({"type": t, "j": l - 1, "basis": "e",
                             "roots": [vec_text(r) for r in [e(l, (1, 1), (-1, l))] + tail],
                             "source": "disappearing roots of type D_l (l even), j = l-1"})
                rows.append({"type": t, "j": l, "basis": "e",
                             "roots": [vec_text(r) for r in [e(l, (1, 1), (1, l))] + tail],
                             "source": "disappearing roots of type D_l (l even), j = l"})
            else:
                h = (l + 1) // 2
                head = [e(l, (1, 1), (1, h)), e(l, (1, 1), (-1, h)),
                        e(l, (1, h), (1, l)), e(l, (1, h), (-1, l)),
                        e(l, (1, 1), (1, l)), e(l, (1, 1), (-1, l))]
                tail = [e(l, (1, i), (1, l - i + 1)) for i in range(2, (l - 1) // 2 + 1)]
                for j in (l - 1, l):
                    rows.append({"type": t, "j": j, "basis": "e",
                                 "roots": [vec_text(r) for r in head + tail],
                                 "source": "disappearing roots of type D_l (l odd), j in {l-1, l}"})
        elif t == "E6":
            coeffs = [[1, 1, 1, 1, 0, 0], [1, 0, 1, 1, 1, 0], [0, 1, 0, 1, 1, 1],
                      [0, 0, 1, 1, 1, 1], [1, 1, 2, 2, 1, 1], [1, 1, 1, 2, 2, 1]]
            for j in (1, 6):
                rows.append({"type": t, "j": j, "basis": "alpha", "roots": coeffs,
                             "source": "disappearing roots of type E_6 (set stable under the diagram symmetry)"})
        elif t == "E7":
            coeffs = [[0, 1, 1, 2, 2, 2, 1], [1, 1, 2, 2, 1, 1, 1], [1, 1, 1, 2, 2, 1, 1]]
            rows.append({"type": t, "j": 7, "basis": "alpha", "roots": coeffs,
                         "source": "disappearing roots of type E_7"})
    return rows


def write(name, table_id, rows):
    doc = {"table_id": table_id, "generator": "expand_tables.py", "rows": rows}
    (HERE / name).write_text(json.dumps(doc, indent=1, ensure_ascii=False) + "\n")


def main():
    write("omega_f.json", "Omega_f", omega_f_rows())
    write("sigma_j.json", "sigma_j", sigma_rows())
    write("table_p.json", "Table_P", table_p_rows())
    write("table_e.json", "Table_E", table_e_rows())
    write("disap_sets.json", "disap_sets", disap_rows())


if __name__ == "__main__":
    main()
