"""Exception hierarchy shared by every module of the package."""


class GraphProductError(Exception):
    """Base class for all errors raised by graphprod."""


class ValidationError(GraphProductError, ValueError):
    """Input data does not describe a valid algebraic object."""


class ShapeMismatch(ValidationError):
    pass


class DuplicateLabel(ValidationError):
    pass


class IdentityLawViolated(ValidationError):
    def __init__(self, j, message=None):
        self.j = j
        super().__init__(message or f"identity law fails at element {j}")


class NotAssociative(ValidationError):
    def __init__(self, i, j, k, message=None):
        self.triple = (i, j, k)
        super().__init__(message or f"not associative: ({i}*{j})*{k} != {i}*({j}*{k})")


class IdentityNotPreserved(ValidationError):
    pass


class NotHomomorphic(ValidationError):
    def __init__(self, i, j, message=None):
        self.pair = (i, j)
        super().__init__(message or f"map is not multiplicative on the pair ({i}, {j})")


class LoopEdge(ValidationError):
    pass


class VertexOutOfRange(ValidationError):
    pass


class ElementOutOfRange(ValidationError):
    pass


class EmptyVertexSet(ValidationError):
    pass


class InvalidLetter(ValidationError):
    pass


class SpecMismatch(GraphProductError):
    pass


class GraphMismatch(GraphProductError):
    pass


class ElementsEqual(GraphProductError):
    pass


class QuotientInsufficient(GraphProductError):
    """A supplied vertex quotient identifies two letters that must stay apart."""

    def __init__(self, vertex, x, y, message=None):
        self.vertex, self.x, self.y = vertex, x, y
        super().__init__(message or f"quotient at vertex {vertex} merges {x} with {y}")


class StateLimitExceeded(GraphProductError):
    def __init__(self, limit, frontier):
        self.limit, self.frontier = limit, frontier
        super().__init__(f"state limit {limit} exceeded with {frontier} states still on the frontier")


class BudgetExceeded(GraphProductError):
    """The brute-force search ran out of budget; this is not a negative answer."""


class UnknownFixture(GraphProductError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class ParseError(GraphProductError):
    def __init__(self, message, line=None, column=None):
        self.line, self.column = line, column
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(message + where)
