class SpecFunError(Exception):
    pass


class DomainError(SpecFunError, ValueError):
    pass


class PoleError(SpecFunError, ValueError):
    def __init__(self, message: str, location=None):
        SpecFunError.__init__(self, message)
        self.location = location


class PoleCollisionError(PoleError):
    pass


class ConvergenceError(SpecFunError, ArithmeticError):
    def __init__(self, message: str, partial_value=None, error_estimate=None):
        SpecFunError.__init__(self, message)
        self.partial_value = partial_value
        self.error_estimate = error_estimate

    def __repr__(self):
        return f'<{self.__class__.__name__} {self.args[0]!r}, ' \
               f'partial: {self.partial_value!r}, error: {self.error_estimate!r}>'
