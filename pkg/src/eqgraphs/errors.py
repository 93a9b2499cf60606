"""Exception types shared across the package."""


class EqGraphError(Exception):
    """Base class for all errors raised by eqgraphs."""


class ParseError(EqGraphError):
    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)


class ArityError(EqGraphError):
    def __init__(self, predicate, arities):
        self.predicate = predicate
        self.arities = tuple(sorted(arities))
        shown = ", ".join(str(a) for a in self.arities)
        super().__init__(f"predicate {predicate!r} used with arities {shown}")


class ValidationError(EqGraphError):
    """A diagram failed validation; ``violations`` holds every problem found."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class FreeVariableError(EqGraphError):
    def __init__(self, names):
        self.names = tuple(sorted(names))
        super().__init__("formula is not a sentence; free variables: " + ", ".join(self.names))


class EmptyDomainError(EqGraphError):
    def __init__(self):
        super().__init__(
            "formula contains quantifiers but the Herbrand domain is empty "
            "(supply constants with --domain)"
        )


class GuardExceeded(EqGraphError):
    def __init__(self, atoms, guard):
        self.atoms = atoms
        self.guard = guard
        super().__init__(f"{atoms} ground atoms exceed the atom guard of {guard} (raise it with --guard)")
