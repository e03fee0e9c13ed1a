"""Azarian's ten staircase questions as (step set, cap, OEIS tag) rows."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from .dsl import parse
from .engine import series
from .steps import Cap, StepSet


@dataclass(frozen=True)
class Question:
    label: str
    prompt: str
    steps: str
    cap: Optional[int]
    oeis: Optional[str] = None
    # OEIS entry matches after substituting x -> x^2
    aerated: bool = False

    @property
    def spec(self) -> StepSet:
        return parse(self.steps)

    def series(self, order: int):
        return series(self.spec, Cap(self.cap), order)

    @property
    def oeis_tag(self) -> str:
        if self.oeis is None:
            return "-"
        return f"{self.oeis} (in x^2)" if self.aerated else self.oeis


def questions(k: int = 3, a: int = 2, b: int = 5) -> List[Question]:
    """The table, with the parametrized questions instantiated at k and a..b."""
    return [
        Question("Q1 even", "distinct even step sizes", "even", 1, "A000009", aerated=True),
        Question("Q1 odd", "distinct odd step sizes", "odd", 1, "A000700"),
        Question("Q2", f"exactly {k} stairs, at most {k} times", f"{{{k}}}", k),
        Question("Q3", "at least two stairs at a time", "2..", None, "A002865"),
        Question("Q4", "at most two stairs at a time", "{1,2}", None, "A008619"),
        Question("Q5 even", "even step sizes", "even", None, "A000041", aerated=True),
        Question("Q5 odd", "odd step sizes", "odd", None, "A000009"),
        Question("Q6", "each step size at most twice", "all", 2, "A000726"),
        Question("Q7", f"exactly {k} stairs each step", f"{{{k}}}", None),
        Question("Q8", "prime step sizes", "primes", None, "A000607"),
        Question("Q8 distinct", "distinct prime step sizes", "primes", 1, "A000586"),
        Question("Q9", "Fibonacci step sizes", "fibonacci", None, "A003107"),
        Question("Q9 distinct", "distinct Fibonacci step sizes", "fibonacci", 1, "A000119"),
        Question("Q10", f"step sizes between {a} and {b}", f"{a}..{b}", None),
    ]
