"""Pure-Python dense kernels for integer Laurent polynomial arithmetic.

Dense arrays hold coefficients from the lowest exponent upward. These are
the fallbacks used when the compiled ``_kernels`` extension is unavailable;
both modules expose the same functions with the same semantics.
"""


def mul_dense(a, b):
    """Convolution of two dense coefficient lists."""
    if not a or not b:
        return []
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, bj in enumerate(b):
        if bj:
            for i, ai in enumerate(a):
                out[i + j] += ai * bj
    return out


def divexact_dense(a, b):
    """Quotient ``c`` with ``c * b == a``; raises ``ArithmeticError`` otherwise.

    ``b`` must have nonzero first and last entries.
    """
    nb = len(b)
    na = len(a)
    if nb == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if na < nb:
        if any(a):
            raise ArithmeticError("not divisible")
        return []
    rem = list(a)
    lead = b[-1]
    nq = na - nb + 1
    quot = [0] * nq
    for k in range(nq - 1, -1, -1):
        top = rem[k + nb - 1]
        if top == 0:
            continue
        c, r = divmod(top, lead)
        if r:
            raise ArithmeticError("not divisible")
        quot[k] = c
        for i in range(nb):
            rem[k + i] -= c * b[i]
    for x in rem[: nb - 1]:
        if x:
            raise ArithmeticError("not divisible")
    return quot


def axpy_dense(acc, offset, c, a):
    """In place ``acc[offset + i] += c * a[i]``."""
    for i, ai in enumerate(a):
        if ai:
            acc[offset + i] += c * ai
