"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: ParseError exits 2,
DomainError exits 3.
"""


class ParseError(ValueError):
    """Malformed textual or JSON input (not a structurally valid object)."""


class DomainError(ValueError):
    """Structurally valid input outside the domain of an operation."""


NOT_IN_IMAGE = "not in the image of the construction"
