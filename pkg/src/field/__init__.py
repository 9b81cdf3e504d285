from src.field.forms import BinaryQF, class_number_narrow, form_cycles, reduced_forms
from src.field.quadfield import (
    QuadraticField,
    QuadraticInteger,
    continued_fraction_unit,
    field_invariants,
    fundamental_unit,
    is_fundamental_discriminant,
    to_fundamental_discriminant,
)

__all__ = [
    "BinaryQF",
    "QuadraticField",
    "QuadraticInteger",
    "class_number_narrow",
    "continued_fraction_unit",
    "field_invariants",
    "form_cycles",
    "fundamental_unit",
    "is_fundamental_discriminant",
    "reduced_forms",
    "to_fundamental_discriminant",
]
