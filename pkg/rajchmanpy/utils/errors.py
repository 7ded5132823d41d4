__all__ = ['DiagnosticCapError']


class DiagnosticCapError(RuntimeError):
    '''
    Raised when a computed diagnostic exceeds its configured hard cap.

    Parameters
    ----------
    message : str
        One line description of the violated cap.
    report : object
        The report (or candidate) that carries the full diagnostics.
    '''

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report
