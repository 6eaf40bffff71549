"""Exact scalar mathematics for the activation zoo.

Each activation has a total forward map, a closed-form first derivative,
and a second derivative (closed form where we have one, a 5-point stencil
otherwise). All scalar math is double precision; batched evaluation lives
in :mod:`golu_lab.kernels`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import special


class DomainError(ValueError):
    """Raised when an operation receives a non-finite input."""


class UndefinedDerivativeError(ValueError):
    """Raised when a derivative is requested at a kink."""


TAGS = ("relu", "leaky_relu", "elu", "gelu", "swish", "mish", "golu", "fmish")

# Below this input the Gompertz gate, GoLU and their derivatives are
# returned as exact zeros. The true magnitudes are under 1e-100 there and
# naive evaluation eventually hits exp overflow (x < -709), so a hard
# cutoff removes the hazard with no measurable error.
GOLU_CUTOFF = -30.0

_KINKED = frozenset({"relu", "leaky_relu", "elu"})
_SQRT2 = math.sqrt(2.0)
_INV_SQRT_2PI = 1.0 / math.sqrt(2.0 * math.pi)


@dataclass(frozen=True)
class ActivationKind:
    """Tag plus the fixed parameters an activation needs.

    `leaky_slope` is only meaningful for leaky_relu, `elu_alpha` only for
    elu; both carry the mainstream defaults.
    """

    tag: str
    leaky_slope: float = 0.01
    elu_alpha: float = 1.0

    def __post_init__(self) -> None:
        if self.tag not in TAGS:
            raise ValueError(f"unknown activation tag {self.tag!r}")
        if not 0.0 < self.leaky_slope < 1.0:
            raise ValueError("leaky_slope must lie in (0, 1)")
        if not self.elu_alpha > 0.0:
            raise ValueError("elu_alpha must be positive")

    @property
    def is_kinked(self) -> bool:
        return self.tag in _KINKED

    @property
    def name(self) -> str:
        return self.tag


RELU = ActivationKind("relu")
LEAKY_RELU = ActivationKind("leaky_relu")
ELU = ActivationKind("elu")
GELU = ActivationKind("gelu")
SWISH = ActivationKind("swish")
MISH = ActivationKind("mish")
GOLU = ActivationKind("golu")
FMISH = ActivationKind("fmish")

# Table-1 comparison set, in the paper-table row order.
BASELINE_KINDS = (RELU, LEAKY_RELU, ELU, GELU, SWISH, MISH, GOLU)
ALL_KINDS = BASELINE_KINDS + (FMISH,)
SMOOTH_KINDS = (GELU, SWISH, MISH, GOLU, FMISH)


def kind_from_name(name: str, leaky_slope: float = 0.01, elu_alpha: float = 1.0) -> ActivationKind:
    tag = name.strip().lower().replace("-", "_")
    if tag == "leakyrelu":
        tag = "leaky_relu"
    return ActivationKind(tag, leaky_slope=leaky_slope, elu_alpha=elu_alpha)


def _check_finite(x: float) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"input must be finite, got {x!r}")
    return x


def softplus(x: float) -> float:
    """ln(1 + e^x), split to avoid overflow on either side."""
    if x > 20.0:
        return x + math.log1p(math.exp(-x))
    if x < -20.0:
        return math.log1p(math.exp(x))
    return math.log1p(math.exp(x))


def sigmoid(x: float) -> float:
    if x >= 0.0:
        return 1.0 / (1.0 + math.exp(-x))
    p = math.exp(x)
    return p / (1.0 + p)


def gompertz(x: float) -> float:
    """e^(-e^(-x)), the CDF of the standard Gumbel distribution."""
    if x <= GOLU_CUTOFF:
        return 0.0
    return math.exp(-math.exp(-x))


def act_forward(kind: ActivationKind, x: float) -> float:
    """Evaluate the activation at a finite scalar input."""
    x = _check_finite(x)
    tag = kind.tag
    if tag == "relu":
        return x if x > 0.0 else 0.0
    if tag == "leaky_relu":
        return x if x > 0.0 else kind.leaky_slope * x
    if tag == "elu":
        return x if x > 0.0 else kind.elu_alpha * math.expm1(x)
    if tag == "gelu":
        return x * 0.5 * (1.0 + special.erf(x / _SQRT2))
    if tag == "swish":
        return x * sigmoid(x)
    if tag == "mish":
        return x * math.tanh(softplus(x))
    if tag == "golu":
        if x <= GOLU_CUTOFF:
            return 0.0
        return x * math.exp(-math.exp(-x))
    # fmish: x * (1 - tanh(softplus(-x))); the gate saturates to 0 for
    # large negative x, so the product never overflows.
    return x * (1.0 - math.tanh(softplus(-x)))


def act_derivative(kind: ActivationKind, x: float) -> float:
    """Closed-form first derivative.

    At the ReLU-family kink (x = 0) the one-sided conventions
    relu'(0)=0, leaky'(0)=slope, elu'(0)=1 apply.
    """
    x = _check_finite(x)
    tag = kind.tag
    if tag == "relu":
        return 1.0 if x > 0.0 else 0.0
    if tag == "leaky_relu":
        return 1.0 if x > 0.0 else kind.leaky_slope
    if tag == "elu":
        return 1.0 if x >= 0.0 else kind.elu_alpha * math.exp(x)
    if tag == "gelu":
        # d/dx x*Phi(x) = Phi(x) + x*phi(x)
        phi = math.exp(-0.5 * x * x) * _INV_SQRT_2PI
        return 0.5 * (1.0 + special.erf(x / _SQRT2)) + x * phi
    if tag == "swish":
        s = sigmoid(x)
        return s * (1.0 + x * (1.0 - s))
    if tag == "mish":
        t = math.tanh(softplus(x))
        return t + x * sigmoid(x) * (1.0 - t * t)
    if tag == "golu":
        if x <= GOLU_CUTOFF:
            return 0.0
        # gate' = e^(-x) * gate, so f' = gate * (1 + x e^(-x))
        return math.exp(-math.exp(-x)) * (1.0 + x * math.exp(-x))
    # fmish gate g(x) = 1 - tanh(softplus(-x)); g' = (1 - t^2) * sigmoid(-x)
    t = math.tanh(softplus(-x))
    return (1.0 - t) + x * (1.0 - t * t) * sigmoid(-x)


_STENCIL = ((-2.0, -1.0), (-1.0, 16.0), (0.0, -30.0), (1.0, 16.0), (2.0, -1.0))


def act_second_derivative(kind: ActivationKind, x: float) -> float:
    """Second derivative: closed form for GoLU, 5-point stencil otherwise.

    Raises UndefinedDerivativeError at the ReLU-family kink.
    """
    x = _check_finite(x)
    if kind.is_kinked and x == 0.0:
        raise UndefinedDerivativeError(f"{kind.tag} has no second derivative at 0")
    if kind.tag == "golu":
        if x <= GOLU_CUTOFF:
            return 0.0
        e = math.exp(-x)
        gate = math.exp(-e)  # underflows to 0 for x < -6.6; true value is smaller still
        return gate * e * (2.0 + x * e - x)
    h = max(1e-4, 1e-4 * abs(x))
    acc = 0.0
    for step, w in _STENCIL:
        acc += w * act_forward(kind, x + step * h)
    return acc / (12.0 * h * h)
