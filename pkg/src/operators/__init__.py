from .core import (
    OperatorError,
    ZeroOperandError,
    NotPositiveError,
    NotAnEffectError,
    RationalSyntaxError,
    parse_rational,
    format_rational,
    is_psd,
    is_effect,
    complement,
    add,
    scale,
    equal,
    proportionality,
    norm_exceeds_half,
    born_probability,
)

__all__ = [
    "OperatorError",
    "ZeroOperandError",
    "NotPositiveError",
    "NotAnEffectError",
    "RationalSyntaxError",
    "parse_rational",
    "format_rational",
    "is_psd",
    "is_effect",
    "complement",
    "add",
    "scale",
    "equal",
    "proportionality",
    "norm_exceeds_half",
    "born_probability",
]
