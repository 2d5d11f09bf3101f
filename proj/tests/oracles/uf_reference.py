"""Scalar transcription of the CEC-2009 unconstrained problems UF1-UF10.

Written independently of the C++ evaluators (plain loops, 1-based indices as
in the technical report) so the two can be compared.
"""
import math


def _groups2(n):
    odd = [j for j in range(3, n + 1) if j % 2 == 1]
    even = [j for j in range(2, n + 1) if j % 2 == 0]
    return odd, even


def _groups3(n):
    g1 = [j for j in range(3, n + 1) if (j - 1) % 3 == 0]
    g2 = [j for j in range(3, n + 1) if (j - 2) % 3 == 0]
    g3 = [j for j in range(3, n + 1) if j % 3 == 0]
    return g1, g2, g3


def bounds(name, n=30):
    if name == "UF3":
        return [0.0] * n, [1.0] * n
    if name in ("UF1", "UF2", "UF5", "UF6", "UF7"):
        return [0.0] + [-1.0] * (n - 1), [1.0] * n
    if name == "UF4":
        return [0.0] + [-2.0] * (n - 1), [1.0] + [2.0] * (n - 1)
    return [0.0, 0.0] + [-2.0] * (n - 2), [1.0, 1.0] + [2.0] * (n - 2)


def uf(name, x):
    n = len(x)
    X = [None] + list(x)  # 1-based
    x1 = X[1]
    pi = math.pi
    if name in ("UF1", "UF2", "UF3", "UF4", "UF5", "UF6", "UF7"):
        J1, J2 = _groups2(n)

        def y(j):
            if name == "UF2":
                a = 0.3 * x1 * x1 * math.cos(24 * pi * x1 + 4 * j * pi / n) + 0.6 * x1
                trig = math.cos if j % 2 == 1 else math.sin
                return X[j] - a * trig(6 * pi * x1 + j * pi / n)
            if name == "UF3":
                return X[j] - x1 ** (0.5 * (1.0 + 3.0 * (j - 2) / (n - 2)))
            return X[j] - math.sin(6 * pi * x1 + j * pi / n)

        def sq_sum(J):
            return sum(y(j) ** 2 for j in J)

        def prod_term(J):
            s = 0.0
            p = 1.0
            for j in J:
                s += y(j) ** 2
                p *= math.cos(20 * y(j) * pi / math.sqrt(j))
            return 4 * s - 2 * p + 2

        if name in ("UF1", "UF2"):
            return [x1 + 2 / len(J1) * sq_sum(J1), 1 - math.sqrt(x1) + 2 / len(J2) * sq_sum(J2)]
        if name == "UF3":
            return [x1 + 2 / len(J1) * prod_term(J1), 1 - math.sqrt(x1) + 2 / len(J2) * prod_term(J2)]
        if name == "UF4":
            h = lambda t: abs(t) / (1 + math.exp(2 * abs(t)))
            return [x1 + 2 / len(J1) * sum(h(y(j)) for j in J1),
                    1 - x1 * x1 + 2 / len(J2) * sum(h(y(j)) for j in J2)]
        if name == "UF5":
            N, eps = 10, 0.1
            h = lambda t: 2 * t * t - math.cos(4 * pi * t) + 1
            extra = (1 / (2 * N) + eps) * abs(math.sin(2 * N * pi * x1))
            return [x1 + extra + 2 / len(J1) * sum(h(y(j)) for j in J1),
                    1 - x1 + extra + 2 / len(J2) * sum(h(y(j)) for j in J2)]
        if name == "UF6":
            N, eps = 2, 0.1
            extra = max(0.0, 2 * (1 / (2 * N) + eps) * math.sin(2 * N * pi * x1))
            return [x1 + extra + 2 / len(J1) * prod_term(J1),
                    1 - x1 + extra + 2 / len(J2) * prod_term(J2)]
        if name == "UF7":
            r = x1 ** 0.2
            return [r + 2 / len(J1) * sq_sum(J1), 1 - r + 2 / len(J2) * sq_sum(J2)]
    x2 = X[2]
    J1, J2, J3 = _groups3(n)

    def y(j):
        return X[j] - 2 * x2 * math.sin(2 * pi * x1 + j * pi / n)

    if name == "UF10":
        g = lambda J: sum(4 * y(j) ** 2 - math.cos(8 * pi * y(j)) + 1 for j in J)
    else:
        g = lambda J: sum(y(j) ** 2 for j in J)
    t1 = 2 / len(J1) * g(J1)
    t2 = 2 / len(J2) * g(J2)
    t3 = 2 / len(J3) * g(J3)
    if name in ("UF8", "UF10"):
        return [math.cos(0.5 * x1 * pi) * math.cos(0.5 * x2 * pi) + t1,
                math.cos(0.5 * x1 * pi) * math.sin(0.5 * x2 * pi) + t2,
                math.sin(0.5 * x1 * pi) + t3]
    eps = 0.1
    bump = max(0.0, (1 + eps) * (1 - 4 * (2 * x1 - 1) ** 2))
    return [0.5 * (bump + 2 * x1) * x2 + t1,
            0.5 * (bump - 2 * x1 + 2) * x2 + t2,
            1 - x2 + t3]
