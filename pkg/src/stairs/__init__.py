"""Count climbs of a staircase with restricted step sizes and multiplicities."""
from .dsl import ParseError, format, parse
from .engine import (ENUMERATION_LIMIT, CountQuery, EnumerationLimitError, Partition,
                     composition_series, count_compositions, count_partitions,
                     enumerate_partitions, multinomial, series)
from .kernels import BACKEND
from .oeis import BFile, VerificationReport, parse_bfile, verify
from .series import (TruncatedSeries, mul, mul_capped_factor_inplace,
                     mul_geometric_inplace, mul_one_minus_power_inplace, one)
from .steps import (ALL, EVEN, FIBONACCI, ODD, PRIMES, UNBOUNDED, All, Cap, Even,
                    Explicit, Fibonacci, Odd, Primes, Range, StepSet, Union,
                    enumerate_upto)

__version__ = "0.1.0"
