# Exception family shared by the library and the CLI


class BilliardsError(Exception):
    pass


class InvalidInputError(BilliardsError, ValueError):
    pass


class ArityMismatchError(InvalidInputError):
    def __init__(self, what: str, expected: int, got: int):
        super().__init__(f"{what} has arity {got}, grid has {expected} dimensions")
        self.expected = expected
        self.got = got


class GridOverflowError(BilliardsError, OverflowError):
    pass


class BudgetExceededError(BilliardsError, RuntimeError):
    def __init__(self, what: str, needed: int, budget: int):
        super().__init__(f"{what} needs {needed} states, budget is {budget}")
        self.needed = needed
        self.budget = budget


class NonExactDivisionError(BilliardsError, ArithmeticError):
    pass


class ConsistencyError(BilliardsError, AssertionError):
    pass
