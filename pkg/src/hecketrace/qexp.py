"""Finite-precision formal q-expansions with exact coefficients.

Coefficients are stored from index 0 (so Eisenstein series fit); trace forms
simply have a zero constant term.  Arithmetic is truncated at the stated
precision and stays exact (int / Fraction / CyclotomicNumber entries all work).
"""

from fractions import Fraction

__all__ = ["QExpansion"]


class QExpansion:
    """A power series sum a_n q^n, n = 0..precision, with a label for provenance."""

    __slots__ = ("precision", "coeffs", "label")

    def __init__(self, coeffs, label: str = "", precision=None):
        coeffs = list(coeffs)
        if precision is None:
            precision = len(coeffs) - 1
        if len(coeffs) < precision + 1:
            coeffs += [0] * (precision + 1 - len(coeffs))
        self.coeffs = tuple(coeffs[: precision + 1])
        self.precision = precision
        self.label = label

    def __getitem__(self, n: int):
        if not 0 <= n <= self.precision:
            raise IndexError(f"coefficient {n} beyond precision {self.precision}")
        return self.coeffs[n]

    def __eq__(self, other):
        if not isinstance(other, QExpansion):
            return NotImplemented
        P = min(self.precision, other.precision)
        return self.coeffs[: P + 1] == other.coeffs[: P + 1]

    __hash__ = None

    def __repr__(self):
        return f"QExpansion({self.label!r}, P={self.precision})"

    def __add__(self, other):
        P = min(self.precision, other.precision)
        return QExpansion([self[i] + other[i] for i in range(P + 1)],
                          label=f"({self.label})+({other.label})")

    def __sub__(self, other):
        P = min(self.precision, other.precision)
        return QExpansion([self[i] - other[i] for i in range(P + 1)],
                          label=f"({self.label})-({other.label})")

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QExpansion([c * other for c in self.coeffs], label=self.label)
        P = min(self.precision, other.precision)
        out = [0] * (P + 1)
        for i, a in enumerate(self.coeffs[: P + 1]):
            if not a:
                continue
            for j in range(P + 1 - i):
                b = other.coeffs[j]
                if b:
                    out[i + j] = out[i + j] + a * b
        return QExpansion(out, label=f"({self.label})*({other.label})")

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative powers not supported")
        result = QExpansion([1], precision=self.precision, label="1")
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def truncate(self, P: int) -> "QExpansion":
        return QExpansion(self.coeffs[: P + 1], label=self.label, precision=P)

    def to_json(self, value_encoder=None):
        """JSON object with coefficients for n = 1..P (trace-form convention)."""
        enc = value_encoder or (lambda v: v)
        return {"label": self.label, "precision": self.precision,
                "coefficients": [enc(c) for c in self.coeffs[1:]]}

    def q_series_text(self, var: str = "q", terms: int = None) -> str:
        """Human-readable q-series, exact coefficients."""
        parts = []
        last = self.precision if terms is None else min(self.precision, terms)
        for n in range(last + 1):
            c = self.coeffs[n]
            if not c:
                continue
            mon = "1" if n == 0 else (var if n == 1 else f"{var}^{n}")
            text_c = str(c)
            sign = "+"
            if text_c.startswith("-"):
                sign, text_c = "-", text_c[1:]
            if n == 0:
                body = text_c
            elif text_c == "1":
                body = mon
            else:
                body = f"{text_c}*{mon}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts) if parts else "0"
        if text.startswith("+ "):
            text = text[2:]
        return f"{text} + O({var}^{self.precision + 1})"
