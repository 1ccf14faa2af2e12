from enum import StrEnum
from fractions import Fraction

import numpy as np

Number = Fraction | float
'''A probability or rate, exact or floating point depending on the arithmetic backend.'''

TOLERANCE = 1e-12
'''Tolerance for row sums and single-step conservation in float mode.'''

MASS_TOLERANCE = 1e-9
'''Tolerance used when validating accumulated float masses at construction time.'''


class Arithmetic(StrEnum):
    EXACT = 'exact'
    FLOAT = 'float'

    @property
    def dtype(self) -> type:
        '''Returns the numpy dtype used for arrays in this backend.'''
        if self == Arithmetic.EXACT:
            return object
        return np.float64

    def number(self, value: Number | int | str) -> Number:
        '''Converts a value to this backend's number type.'''
        if isinstance(value, str):
            return self.parse(value)
        if self == Arithmetic.EXACT:
            return Fraction(value)
        return float(value)

    def ratio(self, numerator: Number | int, denominator: Number | int) -> Number:
        '''Returns numerator / denominator in this backend.'''
        return self.number(numerator) / self.number(denominator)

    def zeros(self, shape: int | tuple[int, ...]) -> np.ndarray:
        '''Returns an array of zeros in this backend.'''
        if self == Arithmetic.EXACT:
            return np.full(shape, Fraction(0), dtype=object)
        return np.zeros(shape, dtype=np.float64)

    def array(self, values) -> np.ndarray:
        '''Converts an iterable of numbers to an array in this backend.'''
        if self == Arithmetic.EXACT:
            return np.array([Fraction(v) for v in values], dtype=object)
        return np.array([float(v) for v in values], dtype=np.float64)

    def parse(self, text: str) -> Number:
        '''Parses a decimal or `p/q` string.'''
        value = Fraction(text.strip())
        if self == Arithmetic.EXACT:
            return value
        return float(value)

    def format(self, value: Number) -> str:
        '''Formats a number: `p/q` for exact values, 17 significant digits otherwise.'''
        if self == Arithmetic.EXACT:
            return str(Fraction(value))
        return format(float(value), '.17g')

    def is_close(self, a: Number, b: Number, tol: float = TOLERANCE) -> bool:
        '''Exact equality in exact mode, absolute tolerance otherwise.'''
        if self == Arithmetic.EXACT:
            return Fraction(a) == Fraction(b)
        return abs(float(a) - float(b)) <= tol

    @classmethod
    def of(cls, value: Number) -> 'Arithmetic':
        '''Infers the backend from a number.'''
        if isinstance(value, Fraction):
            return cls.EXACT
        return cls.FLOAT
