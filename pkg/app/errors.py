"""Domain errors."""


class HypergraphError(ValueError):
    """Invalid hypergraph construction or edge reference."""


class HypergraphFormatError(HypergraphError):
    """Diagnostic for the text hypergraph format."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class CoverError(ValueError):
    """Malformed cover, permutation or cover file."""


class BudgetExceededError(ValueError):
    """An enumeration would exceed its configured budget."""

    def __init__(self, what: str, size: int, budget: int):
        super().__init__(f"{what}: {size} exceeds budget {budget}")
        self.what = what
        self.size = size
        self.budget = budget


class HypothesisError(ValueError):
    """Precondition of a bound or expansion does not hold for the input."""
