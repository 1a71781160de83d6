"""Convert two_series_oracle.py output into the library's canonical text form.

Terms are sorted by exponent vector, lexicographically descending; coefficients
print as n or n/d, a unit coefficient is omitted, monomials as v1^2*v2.

    python3 tests/oracles/two_series_oracle.py 16 | python3 tests/oracles/to_canonical.py
"""
import sys
import sympy as sp


def canonical(expr, gens):
    if expr == 0:
        return "0"
    poly = sp.Poly(expr, *gens)
    terms = sorted(poly.terms(), key=lambda t: t[0], reverse=True)
    out = ""
    for exps, coeff in terms:
        coeff = sp.Rational(coeff)
        neg = coeff < 0
        mag = -coeff if neg else coeff
        mono = "*".join(
            f"v{i + 1}" + (f"^{e}" if e > 1 else "") for i, e in enumerate(exps) if e
        )
        cs = str(mag.p) if mag.q == 1 else f"{mag.p}/{mag.q}"
        if mono:
            body = mono if cs == "1" else f"{cs}*{mono}"
        else:
            body = cs
        if not out:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


for line in sys.stdin:
    parts = line.split(" ", 1)
    if not parts[0].isdigit():
        continue
    j = int(parts[0])
    text = parts[1].rsplit(" ", 1)[0]
    gens = sp.symbols("v1:6")
    print(f"{j}\t{canonical(sp.sympify(text), gens)}")
