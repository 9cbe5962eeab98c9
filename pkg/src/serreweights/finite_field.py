"""Small extension fields F_{p^k} with a fixed primitive generator.

Elements are encoded as integers c_0 + c_1 p + ... + c_{k-1} p^(k-1), the
coefficients of a polynomial in the generator x.  The defining polynomial is
the first monic primitive polynomial of degree k in the order of this
encoding, found by exhaustive search, so x itself generates F^*.
"""

from __future__ import annotations

from functools import lru_cache


def _digits(n: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        n, d = divmod(n, p)
        out.append(d)
    return out


def _undigits(ds: list[int], p: int) -> int:
    n = 0
    for d in reversed(ds):
        n = n * p + d
    return n


class FiniteField:
    def __init__(self, p: int, k: int):
        self.p, self.k = p, k
        self.order = p**k
        self.modulus = self._find_primitive()
        self._build_tables()

    def _mul_by_x(self, a: list[int], modulus: list[int]) -> list[int]:
        # modulus holds c_0..c_{k-1} of x^k + c_{k-1}x^{k-1} + ... + c_0
        top = a[-1]
        shifted = [0] + a[:-1]
        return [(s - top * c) % self.p for s, c in zip(shifted, modulus)]

    def _find_primitive(self) -> list[int]:
        p, k = self.p, self.k
        n = self.order - 1
        if k == 1:
            # x is replaced by the least primitive root, stored as a degree-1 "modulus"
            for g in range(1, p):
                if all(pow(g, d, p) != 1 for d in range(1, n)) or n == 1:
                    return [(-g) % p]
            raise AssertionError("no primitive root")
        for code in range(p**k):
            mod = _digits(code, p, k)
            if mod[0] == 0:
                continue
            cur = [1] + [0] * (k - 1)
            order = None
            for i in range(1, n + 1):
                cur = self._mul_by_x(cur, mod)
                if cur == [1] + [0] * (k - 1):
                    order = i
                    break
            if order == n:
                return mod
        raise AssertionError("no primitive polynomial found")

    def _build_tables(self) -> None:
        n = self.order - 1
        self.exp: list[int] = []
        self.log: dict[int, int] = {}
        cur = [1] + [0] * (self.k - 1)
        for i in range(n):
            code = _undigits(cur, self.p)
            self.exp.append(code)
            self.log[code] = i
            cur = self._mul_by_x(cur, self.modulus)
        assert len(self.log) == n

    @property
    def generator(self) -> int:
        return self.exp[1 % (self.order - 1)]

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.order - 1)]

    def add(self, a: int, b: int) -> int:
        p, k = self.p, self.k
        return _undigits([(x + y) % p for x, y in zip(_digits(a, p, k), _digits(b, p, k))], p)

    def power(self, a: int, e: int) -> int:
        if a == 0:
            return 0 if e else 1
        return self.exp[(self.log[a] * e) % (self.order - 1)]

    def modulus_coefficients(self) -> list[int]:
        """Coefficients c_0..c_k (monic) of the defining polynomial."""
        return list(self.modulus) + [1]


@lru_cache(maxsize=None)
def field(p: int, k: int) -> FiniteField:
    return FiniteField(p, k)
