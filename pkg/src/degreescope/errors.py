'''Exceptions raised by degreescope.'''


class DegreeScopeError(Exception):
    '''Base class for all degreescope errors.'''


class ValidationError(DegreeScopeError, ValueError):
    '''An input value is out of range or malformed.'''

    def __init__(self, field: str, message: str, line: int | None = None) -> None:
        self.field = field
        '''Name of the offending field.'''

        self.message = message

        self.line = line
        '''1-based line number in the source document, if known.'''

        location = f' (line {line})' if line is not None else ''
        super().__init__(f'{field}: {message}{location}')


class EdgeListError(ValidationError):
    '''An edge-list document could not be parsed.'''

    def __init__(self, message: str, line: int | None = None) -> None:
        super().__init__('edge-list', message, line)


class UnknownNodeError(DegreeScopeError, KeyError):
    '''A node label is not part of the graph.'''

    def __init__(self, label: str) -> None:
        self.label = label
        super().__init__(f'Unknown node: {label!r}')

    def __str__(self) -> str:
        return self.args[0]


class EnumerationCapError(DegreeScopeError):
    '''An exhaustive enumeration produced more members than allowed.'''


class UnoccupiedStateError(DegreeScopeError):
    '''No node in the ensemble occupies the requested state.'''


class DegenerateReassignmentError(DegreeScopeError):
    '''The isolated-node reassignment has no surviving mass to redistribute over.'''


class CapLeakageError(DegreeScopeError):
    '''More mass hit the size cap in one step than allowed.'''
