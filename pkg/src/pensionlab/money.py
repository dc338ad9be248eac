"""Exact money and rate primitives.

Every rupee amount in the engine is a :class:`Money`: an exact quantity
of paise held as a :class:`fractions.Fraction`.  Scaling by a
:class:`Rate` is exact rational arithmetic — a 420-month accumulation
loop carries zero drift.  Rounding happens in exactly two places, both
explicit:

* :func:`round_to_rupees` — the single presentation rounding (half-up
  to a whole rupee) applied at output boundaries, and
* :meth:`Money.quantize_paise` — materialisation of a sub-paise exact
  value onto the integer-paise wire format.

Rates are exact decimal fractions (denominator a power of ten, at most
``DECIMAL_DIGITS`` fractional digits).  Operations that would produce a
non-terminating decimal (a nominal monthly rate of 10%/12, an effective
monthly root) quantize half-up at the 18th fractional digit, keeping
420-step compounding error far below one rupee at crore scale.

Floats are rejected everywhere: construct from int, str, Decimal or
Fraction only.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from decimal import Decimal, InvalidOperation, localcontext
from fractions import Fraction
from typing import Union

PAISE_PER_RUPEE = 100

#: Fractional digits kept when a rate value must be quantized.  Chosen so
#: that compounding a quantized effective-annual monthly rate 12 times
#: reproduces 1+r to better than 1e-12 relative error.
DECIMAL_DIGITS = 18

_SCALE = 10**DECIMAL_DIGITS

Numeric = Union[int, str, Decimal, Fraction]


def round_half_up(value: Fraction) -> int:
    """Round an exact fraction to the nearest integer, ties away from zero."""
    n, d = value.numerator, value.denominator
    if n >= 0:
        return (2 * n + d) // (2 * d)
    return -((-2 * n + d) // (2 * d))


def exact_fraction(value: Numeric, *, field: str = "value") -> Fraction:
    """Convert an int/str/Decimal/Fraction to an exact Fraction.

    Floats are refused: they rarely carry the intended decimal value and
    would silently corrupt exact arithmetic.
    """
    if isinstance(value, bool):
        raise TypeError(f"{field}: bool is not a numeric value")
    if isinstance(value, float):
        raise TypeError(f"{field}: floats are not accepted; pass str, Decimal, int or Fraction")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"{field}: non-finite decimal")
        return Fraction(value)
    if isinstance(value, str):
        try:
            dec = Decimal(value)
        except InvalidOperation as exc:
            raise ValueError(f"{field}: {value!r} is not a decimal number") from exc
        if not dec.is_finite():
            raise ValueError(f"{field}: non-finite decimal")
        return Fraction(dec)
    raise TypeError(f"{field}: unsupported numeric type {type(value).__name__}")


def quantize_decimal(value: Fraction, digits: int = DECIMAL_DIGITS) -> Fraction:
    """Snap a fraction onto the decimal grid with `digits` fractional digits.

    Exact decimal fractions that already fit the grid pass through
    unchanged; everything else rounds half-up.
    """
    scale = 10**digits
    if scale % value.denominator == 0:
        return value
    return Fraction(round_half_up(value * scale), scale)


def fraction_to_decimal_str(value: Fraction) -> str:
    """Render an exact decimal fraction canonically ("0.0075", "0.42", "1")."""
    q = quantize_decimal(value)
    scaled = q.numerator * (_SCALE // q.denominator)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, _SCALE)
    if frac == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{str(frac).rjust(DECIMAL_DIGITS, '0').rstrip('0')}"


class Period(enum.Enum):
    PER_YEAR = "PerYear"
    PER_MONTH = "PerMonth"


class RateKind(enum.Enum):
    GROWTH = "Growth"
    RETURN = "Return"
    ANNUITY = "Annuity"
    CONTRIBUTION = "Contribution"
    DA = "DA"
    #: Derived dimensionless outputs: replacement ratios, corpus shares,
    #: allocation weights.  The period field is inert for this kind.
    RATIO = "Ratio"


class RateBasis(enum.Enum):
    """How an annual rate converts to a monthly compounding rate."""

    NOMINAL_MONTHLY = "NominalMonthly"
    EFFECTIVE_ANNUAL = "EffectiveAnnual"


@dataclass(frozen=True, slots=True)
class Rate:
    """An exact decimal rate with explicit period and kind.

    ``value`` is the decimal fraction (9% is ``Fraction(9, 100)``), never
    a percent.  Negative rates are rejected at construction; period
    conversions are explicit via :func:`annual_to_monthly`.
    """

    value: Fraction
    period: Period = Period.PER_YEAR
    kind: RateKind = RateKind.RETURN

    def __post_init__(self) -> None:
        value = exact_fraction(self.value, field="rate value")
        value = quantize_decimal(value)
        if value < 0:
            raise ValueError(f"negative rate {fraction_to_decimal_str(value)} rejected")
        object.__setattr__(self, "value", value)
        if not isinstance(self.period, Period):
            raise TypeError(f"period must be a Period, got {self.period!r}")
        if not isinstance(self.kind, RateKind):
            raise TypeError(f"kind must be a RateKind, got {self.kind!r}")

    @classmethod
    def from_percent(
        cls,
        percent: Numeric,
        period: Period = Period.PER_YEAR,
        kind: RateKind = RateKind.RETURN,
    ) -> "Rate":
        """Build from percent units: ``from_percent("9")`` is 9% = 0.09."""
        return cls(exact_fraction(percent, field="percent") / 100, period, kind)

    @classmethod
    def zero(cls, period: Period = Period.PER_YEAR, kind: RateKind = RateKind.RETURN) -> "Rate":
        return cls(Fraction(0), period, kind)

    def as_decimal_str(self) -> str:
        return fraction_to_decimal_str(self.value)

    def as_percent_str(self, places: int = 2) -> str:
        """Presentation form, e.g. '14.19%'. Half-up at the given places."""
        scale = 10**places
        scaled = round_half_up(self.value * 100 * scale)
        whole, frac = divmod(abs(scaled), scale)
        sign = "-" if scaled < 0 else ""
        if places == 0:
            return f"{sign}{whole}%"
        return f"{sign}{whole}.{str(frac).rjust(places, '0')}%"

    def _check_same_period(self, other: "Rate") -> None:
        if self.period is not other.period:
            raise ValueError(f"cannot combine {self.period.value} and {other.period.value} rates")

    def __add__(self, other: "Rate") -> "Rate":
        if not isinstance(other, Rate):
            return NotImplemented
        self._check_same_period(other)
        return Rate(self.value + other.value, self.period, self.kind)

    def __sub__(self, other: "Rate") -> "Rate":
        if not isinstance(other, Rate):
            return NotImplemented
        self._check_same_period(other)
        return Rate(self.value - other.value, self.period, self.kind)

    def to_json(self) -> dict:
        return {
            "value": self.as_decimal_str(),
            "period": self.period.value,
            "kind": self.kind.value,
        }

    @classmethod
    def from_json(cls, obj: object, *, field: str = "rate") -> "Rate":
        from .jsonutil import expect_mapping, expect_str  # local import avoids cycle

        data = expect_mapping(obj, {"value", "period", "kind"}, field=field)
        raw = data["value"]
        if not isinstance(raw, str):
            raise _field_error(field, "value", "rate value must be a decimal string")
        try:
            value = exact_fraction(raw, field=f"{field}.value")
        except (ValueError, TypeError) as exc:
            raise _field_error(field, "value", str(exc)) from exc
        period = _parse_enum(Period, expect_str(data["period"], field=f"{field}.period"), field, "period")
        kind = _parse_enum(RateKind, expect_str(data["kind"], field=f"{field}.kind"), field, "kind")
        try:
            return cls(value, period, kind)
        except ValueError as exc:
            raise _field_error(field, "value", str(exc)) from exc

    def __repr__(self) -> str:  # keep huge denominators out of tracebacks
        return f"Rate({self.as_decimal_str()!r}, {self.period.value}, {self.kind.value})"


def _field_error(prefix: str, name: str, message: str):
    from .errors import ValidationError

    return ValidationError.single(f"{prefix}.{name}", message)


def _parse_enum(enum_cls, raw: str, prefix: str, name: str):
    for member in enum_cls:
        if member.value == raw:
            return member
    allowed = ", ".join(m.value for m in enum_cls)
    raise _field_error(prefix, name, f"expected one of {allowed}, got {raw!r}")


def annual_to_monthly(rate: Rate, basis) -> Rate:
    """Convert an annual rate to the monthly compounding rate.

    ``basis`` is a :class:`RateBasis` or anything carrying a
    ``rate_basis`` attribute (a compounding convention).  NominalMonthly
    divides by 12; EffectiveAnnual takes the twelfth root of 1+r so that
    compounding twelve times reproduces the annual rate.
    """
    basis = getattr(basis, "rate_basis", basis)
    if not isinstance(basis, RateBasis):
        raise TypeError(f"expected RateBasis, got {basis!r}")
    if rate.period is not Period.PER_YEAR:
        raise ValueError("annual_to_monthly requires a PerYear rate")
    if basis is RateBasis.NOMINAL_MONTHLY:
        monthly = rate.value / 12
    else:
        monthly = _effective_monthly(rate.value)
    return Rate(monthly, Period.PER_MONTH, rate.kind)


def _effective_monthly(annual: Fraction) -> Fraction:
    """Exact-decimal approximation of (1+r)^(1/12) - 1."""
    if annual == 0:
        return Fraction(0)
    with localcontext() as ctx:
        ctx.prec = 50
        grown = 1 + Decimal(annual.numerator) / Decimal(annual.denominator)
        monthly = (grown.ln() / 12).exp() - 1
    return quantize_decimal(Fraction(monthly))


@dataclass(frozen=True, slots=True)
class Money:
    """An exact amount of money in paise (1 rupee = 100 paise).

    ``amount_paise`` is an exact Fraction; constructed amounts are whole
    paise, and scaling by a Rate keeps the exact rational value.  Use
    :meth:`quantize_paise` to materialise onto the integer-paise wire
    format and :meth:`round_to_rupees` for presentation.
    """

    amount_paise: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "amount_paise", exact_fraction(self.amount_paise, field="amount_paise")
        )

    @classmethod
    def from_paise(cls, paise: int) -> "Money":
        if isinstance(paise, bool) or not isinstance(paise, int):
            raise TypeError("paise must be an int")
        return cls(Fraction(paise))

    @classmethod
    def from_rupees(cls, rupees: Numeric) -> "Money":
        return cls(exact_fraction(rupees, field="rupees") * PAISE_PER_RUPEE)

    @classmethod
    def zero(cls) -> "Money":
        return cls(Fraction(0))

    # -- exact arithmetic --------------------------------------------------

    def __add__(self, other: "Money") -> "Money":
        if not isinstance(other, Money):
            return NotImplemented
        return Money(self.amount_paise + other.amount_paise)

    def __sub__(self, other: "Money") -> "Money":
        if not isinstance(other, Money):
            return NotImplemented
        return Money(self.amount_paise - other.amount_paise)

    def __neg__(self) -> "Money":
        return Money(-self.amount_paise)

    def __mul__(self, factor) -> "Money":
        if isinstance(factor, Rate):
            return Money(self.amount_paise * factor.value)
        if isinstance(factor, (int, Fraction, Decimal)) and not isinstance(factor, bool):
            return Money(self.amount_paise * exact_fraction(factor, field="factor"))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, divisor):
        if isinstance(divisor, Money):
            if divisor.amount_paise == 0:
                raise ZeroDivisionError("division by zero Money")
            return self.amount_paise / divisor.amount_paise
        if isinstance(divisor, (int, Fraction)) and not isinstance(divisor, bool):
            return Money(self.amount_paise / divisor)
        return NotImplemented

    def __lt__(self, other: "Money") -> bool:
        return self.amount_paise < other.amount_paise

    def __le__(self, other: "Money") -> bool:
        return self.amount_paise <= other.amount_paise

    def __gt__(self, other: "Money") -> bool:
        return self.amount_paise > other.amount_paise

    def __ge__(self, other: "Money") -> bool:
        return self.amount_paise >= other.amount_paise

    def __bool__(self) -> bool:
        return self.amount_paise != 0

    # -- materialisation and presentation ----------------------------------

    @property
    def is_integral_paise(self) -> bool:
        return self.amount_paise.denominator == 1

    @property
    def paise(self) -> int:
        """Exact integer paise; raises if the amount is sub-paise."""
        if not self.is_integral_paise:
            raise ValueError("amount has a fractional paise part; quantize_paise() first")
        return self.amount_paise.numerator

    def quantize_paise(self) -> "Money":
        """Materialise to whole paise, half-up.  Idempotent."""
        return Money(Fraction(round_half_up(self.amount_paise)))

    def round_to_rupees(self) -> "Money":
        """Presentation rounding: half-up to the nearest whole rupee."""
        rupees = round_half_up(self.amount_paise / PAISE_PER_RUPEE)
        return Money(Fraction(rupees * PAISE_PER_RUPEE))

    def rupee_value(self) -> int:
        """Whole-rupee value after presentation rounding."""
        return round_half_up(self.amount_paise / PAISE_PER_RUPEE)

    def format_inr(self) -> str:
        """Indian-grouped presentation string, e.g. '₹ 22,45,536'."""
        return f"₹ {format_indian(self.rupee_value())}"

    def to_json(self) -> dict:
        """Wire form: integer paise.  Sub-paise exact values quantize half-up."""
        return {"paise": round_half_up(self.amount_paise)}

    @classmethod
    def from_json(cls, obj: object, *, field: str = "money") -> "Money":
        from .jsonutil import expect_mapping

        data = expect_mapping(obj, {"paise"}, field=field)
        paise = data["paise"]
        if isinstance(paise, bool) or not isinstance(paise, int):
            raise _field_error(field, "paise", "must be an integer number of paise")
        return cls.from_paise(paise)

    def __repr__(self) -> str:
        if self.is_integral_paise:
            return f"Money(paise={self.amount_paise.numerator})"
        approx = self.amount_paise.numerator / self.amount_paise.denominator
        return f"Money(~{approx:.4f} paise)"


def round_to_rupees(money: Money) -> Money:
    """Module-level alias for the single presentation rounding."""
    return money.round_to_rupees()


def format_indian(value: int) -> str:
    """Group an integer Indian style: 2245536 -> '22,45,536'."""
    sign = "-" if value < 0 else ""
    digits = str(abs(value))
    if len(digits) <= 3:
        return sign + digits
    head, tail = digits[:-3], digits[-3:]
    groups = []
    while len(head) > 2:
        groups.insert(0, head[-2:])
        head = head[:-2]
    if head:
        groups.insert(0, head)
    return sign + ",".join(groups + [tail])
