"""Survey outcomes shared by the checking and analysis operations."""

from dataclasses import dataclass

VERDICTS = ("pass", "fail", "inconclusive")


@dataclass(frozen=True)
class AnalysisReport:
    """Verdict of an empirical check over a half-open integer range.

    ``first_counterexample`` pairs the smallest offending index with a short
    description and is present exactly when the verdict is "fail". ``note``
    can carry a caveat about what was actually checked.
    """

    verdict: str
    checked_range: tuple[int, int]
    first_counterexample: tuple[int, str] | None = None
    note: str = ""

    def __post_init__(self):
        if self.verdict not in VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")
        if self.verdict == "fail" and self.first_counterexample is None:
            raise ValueError("failing report needs a counterexample")

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    @classmethod
    def passing(cls, lo: int, hi: int, note: str = "") -> "AnalysisReport":
        return cls("pass", (lo, hi), None, note)

    @classmethod
    def failing(
        cls, n: int, detail: str, lo: int, hi: int, note: str = ""
    ) -> "AnalysisReport":
        return cls("fail", (lo, hi), (n, detail), note)

    def render(self) -> str:
        """Human line plus a key=value trailer for scripting."""
        lines = []
        if self.note:
            lines.append(f"note: {self.note}")
        lo, hi = self.checked_range
        trailer = f"verdict={self.verdict} lo={lo} hi={hi}"
        if self.verdict == "fail":
            n, detail = self.first_counterexample
            lines.append(f"fail: n={n}: {detail}")
            trailer += f" counterexample={n}"
        elif self.verdict == "pass":
            lines.append(f"pass: no counterexample in [{lo}, {hi})")
        else:
            lines.append("inconclusive")
        lines.append(trailer)
        return "\n".join(lines)
