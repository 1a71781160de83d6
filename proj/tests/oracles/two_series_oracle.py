"""Independent oracle for the 2-typical [2]-series in the v_i := coeff(x^(2^i)) basis.

Uses sympy rationals and truncated power series; shares no code with the C++
implementation. Prints the coefficient of x^j for j = 1..N, the check that every
coefficient is 2-locally integral, and the self-consistency check
log([2](x)) == 2 log(x).

    python3 tests/oracles/two_series_oracle.py 16
"""
import sys
import sympy as sp

N = int(sys.argv[1]) if len(sys.argv) > 1 else 8
K = N.bit_length() - 1  # generators m_1..m_K with 2^K <= N
m = sp.symbols(f"m1:{K + 1}")
v = sp.symbols(f"v1:{K + 1}")


def mul(a, b):
    out = [sp.Integer(0)] * (N + 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j in range(N + 1 - i):
            if b[j] != 0:
                out[i + j] += ai * b[j]
    return [sp.expand(c) for c in out]


def compose(f, g):
    # f(g(x)), g has no constant term
    out = [sp.Integer(0)] * (N + 1)
    power = [sp.Integer(0)] * (N + 1)
    power[0] = sp.Integer(1)
    for k in range(1, N + 1):
        power = mul(power, g)
        if f[k] != 0:
            out = [sp.expand(o + f[k] * p) for o, p in zip(out, power)]
    return out


log = [sp.Integer(0)] * (N + 1)
log[1] = sp.Integer(1)
for i in range(1, K + 1):
    log[2 ** i] = m[i - 1]

# exp = compositional inverse of log, coefficient by coefficient
exp = [sp.Integer(0)] * (N + 1)
exp[1] = sp.Integer(1)
for k in range(2, N + 1):
    c = compose(log, exp)[k]
    exp[k] = sp.expand(-c)

two_log = [sp.expand(2 * c) for c in log]
two = compose(exp, two_log)

sub = {}
for i in range(1, K + 1):
    sol = sp.solve(sp.expand(two[2 ** i].subs(sub)) - v[i - 1], m[i - 1])[0]
    sub[m[i - 1]] = sp.expand(sol)

two_v = [sp.expand(c.subs(sub)) for c in two]
ok = True
for j in range(1, N + 1):
    c = two_v[j]
    integral = all(sp.Rational(t.as_coeff_Mul()[0]).q % 2 == 1 for t in sp.Add.make_args(c)) if c != 0 else True
    ok &= integral
    print(j, sp.Poly(c, *v).as_expr() if c != 0 else 0, "integral" if integral else "NOT-INTEGRAL")

log_v = [sp.expand(c.subs(sub)) for c in log]
lhs = compose(log_v, two_v)
print("log([2](x)) == 2 log(x):", all(sp.expand(a - 2 * b) == 0 for a, b in zip(lhs, log_v)))
print("all integral:", ok)
