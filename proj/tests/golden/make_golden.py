"""Regenerates the classification golden tables.

Independent of the C++ code: enumerates irreducible patterns with plain
Python, canonicalizes by brute force over permutations, and assigns the
expected status of every class from the reference group rules.

    python3 make_golden.py            # writes classify_order2.json, classify_order3.json
"""

import itertools
import json
import pathlib

PRIMES = [2, 3, 5, 7, 13]

# Listed order-3 patterns, row-major, with their case labels.
LISTED = {
    "A_{1,1}": "0*0 00* *00", "A_{1,2}": "**0 00* *00", "A_{1,3}": "**0 0** *00", "A_{1,4}": "**0 0** *0*",
    "A_{2,1}": "0*0 *0* 0*0", "A_{2,2}": "**0 *0* 0*0", "A_{2,3}": "0*0 *** 0*0", "A_{2,4}": "**0 *** 0*0",
    "A_{2,5}": "**0 *0* 0**", "A_{2,6}": "**0 *** 0**",
    "A_{3,1}": "0*0 *0* *00", "A_{3,2}": "**0 *0* *00", "A_{3,3}": "0*0 *** *00", "A_{3,4}": "0*0 *0* *0*",
    "A_{3,5}": "**0 *** *00", "A_{3,6}": "**0 *0* *0*", "A_{3,7}": "0*0 *** *0*", "A_{3,8}": "**0 *** *0*",
    "A_{4,1}": "0** *0* *00", "A_{4,2}": "*** *0* *00", "A_{4,3}": "0** *** *00", "A_{4,4}": "0** *0* *0*",
    "A_{4,5}": "*** *** *00", "A_{4,6}": "*** *0* *0*", "A_{4,7}": "0** *** *0*", "A_{4,8}": "*** *** *0*",
    "A_{5,1}": "0** *0* **0", "A_{5,2}": "*** *0* **0", "A_{5,3}": "*** *** **0", "A_{5,4}": "*** *** ***",
}

GROUPS = {
    "1": ["A_{2,1}", "A_{3,6}", "A_{3,7}", "A_{5,3}"],
    "2": ["A_{2,5}", "A_{4,5}", "A_{4,6}", "A_{4,8}", "A_{5,1}", "A_{5,4}"],
    "3": ["A_{2,6}", "A_{3,8}", "A_{4,7}"],
    "4": ["A_{1,4}"],
}


def cube_roots_split(p):
    # x^3 - 1 has three roots in Z_p counted with multiplicity.
    return p == 3 or (p - 1) % 3 == 0


def group_holds(group, p):
    return {"1": True, "2": p != 2, "3": p not in (2, 3), "4": cube_roots_split(p)}[group]


def strongly_connected(n, stars):
    for start in range(n):
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in range(n):
                if (v, w) in stars and w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != n:
            return False
    return True


def key(n, stars):
    return "".join("*" if (i, j) in stars else "0" for i in range(n) for j in range(n))


def canonical(n, stars):
    best = None
    for perm in itertools.permutations(range(n)):
        image = {(perm[i], perm[j]) for (i, j) in stars}
        k = key(n, image).replace("*", "1")
        if best is None or k < best:
            best = k
    return best.replace("1", "*")


def rows(k, n):
    return [k[i * n:(i + 1) * n] for i in range(n)]


def classes(n):
    out = set()
    cells = [(i, j) for i in range(n) for j in range(n)]
    for bits in range(1 << (n * n)):
        stars = {cells[b] for b in range(n * n) if bits >> b & 1}
        if strongly_connected(n, stars):
            out.add(canonical(n, stars))
    return sorted(out, key=lambda c: c.replace("*", "1"))


def stars_of(text):
    cells = text.replace(" ", "")
    n = int(len(cells) ** 0.5)
    return n, {(i, j) for i in range(n) for j in range(n) if cells[i * n + j] == "*"}


def order2():
    full = canonical(2, {(0, 0), (0, 1), (1, 0), (1, 1)})
    table = []
    for c in classes(2):
        pn = c == full
        table.append({
            "pattern": rows(c, 2),
            "labels": [],
            "group": "1" if pn else "not PN",
            "status": {str(p): "potentially_nilpotent" if pn else "not_potentially_nilpotent" for p in PRIMES},
        })
    return {"order": 2, "primes": PRIMES, "classes": table}


def order3():
    labels = {}
    for name, text in LISTED.items():
        labels.setdefault(canonical(*stars_of(text)), []).append(name)
    group_of = {name: g for g, names in GROUPS.items() for name in names}
    table = []
    for c in classes(3):
        names = sorted(labels.get(c, []))
        groups = sorted({group_of[x] for x in names if x in group_of})
        assert len(groups) <= 1, (c, names)
        group = groups[0] if groups else "not PN"
        status = {}
        for p in PRIMES:
            pn = group != "not PN" and group_holds(group, p)
            status[str(p)] = "potentially_nilpotent" if pn else "not_potentially_nilpotent"
        table.append({"pattern": rows(c, 3), "labels": names, "group": group, "status": status})
    return {"order": 3, "primes": PRIMES, "classes": table}


def main():
    here = pathlib.Path(__file__).resolve().parent
    for name, table in (("classify_order2.json", order2()), ("classify_order3.json", order3())):
        (here / name).write_text(json.dumps(table, indent=2) + "\n")
        print(name, len(table["classes"]), "classes")


if __name__ == "__main__":
    main()
