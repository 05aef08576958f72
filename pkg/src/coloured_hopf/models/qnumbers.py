import cmath

Q_GUARD = 1e-12
Q_REJECT = 1e-8


def q_number(x: complex, q: complex) -> complex:
    """Symmetric q-number ``(q^x - q^-x) / (q - q^-1)``, equal to ``x`` at q = 1."""
    if abs(q * q - 1) < Q_GUARD:
        return complex(x)
    lq = cmath.log(q)
    return (cmath.exp(x * lq) - cmath.exp(-x * lq)) / (q - 1 / q)


def q_factorial(n: int, q: complex) -> complex:
    out = 1 + 0j
    for k in range(1, n + 1):
        out *= q_number(k, q)
    return out
