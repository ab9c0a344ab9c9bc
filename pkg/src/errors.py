"""
Exception hierarchy
Every error raised by the engine derives from Pro2EqError and carries the
process exit code main.py reports for it.
"""

from typing import Iterable, Optional


class Pro2EqError(Exception):
    """Base class for all engine errors"""

    exit_code = 6


class InputError(Pro2EqError):
    """Malformed user input (expressions, annotations, tower files)"""

    exit_code = 3


class AnalysisError(Pro2EqError):
    """An analysis could not be carried out on a valid input"""

    exit_code = 5


class ConfigError(Pro2EqError):
    exit_code = 4


class ExpressionSyntaxError(InputError):
    """Raised when an expression does not conform to the grammar"""

    def __init__(self, position: int, expected: Iterable[str], text: str = ""):
        self.position = position
        self.expected = sorted(set(expected))
        self.text = text
        shown = ", ".join(self.expected) if self.expected else "end of input"
        super().__init__(f"syntax error at position {position}: expected {shown}")


class SemanticError(InputError):
    pass


class AnnotationError(InputError):
    pass


class TowerFormatError(InputError):
    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class LetterOutOfRange(InputError):
    def __init__(self, letter: int, rank: int):
        self.letter = letter
        self.rank = rank
        super().__init__(f"letter {letter} outside rank context {rank}")


class RankMismatch(AnalysisError):
    pass


class NotOneEnded(AnalysisError):
    pass


class NotKnownP3R(AnalysisError):
    pass


class NotInfiniteEnded(AnalysisError):
    pass


class Undecomposable(AnalysisError):
    pass


class NotStandard(AnalysisError):
    pass


class WindowExhausted(AnalysisError):
    def __init__(self, depth: int, window: int):
        self.depth = depth
        self.window = window
        super().__init__(f"depth {depth} exceeds tower window {window}")


class UnsupportedConstructor(AnalysisError):
    def __init__(self, which: str):
        self.which = which
        super().__init__(f"constructor not supported by the Cayley oracle: {which}")


class BudgetExceeded(AnalysisError):
    def __init__(self, limit: int, reached_radius: int):
        self.limit = limit
        self.reached_radius = reached_radius
        super().__init__(f"element budget {limit} exceeded after radius {reached_radius}")


class InsufficientRadius(AnalysisError):
    def __init__(self, k: int, radius: int, margin: int):
        self.k = k
        self.radius = radius
        self.margin = margin
        super().__init__(f"radius {radius} is within {margin} of removed ball radius {k}")
