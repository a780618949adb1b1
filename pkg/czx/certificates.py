from enum import Enum
from typing import Callable, List, Optional


class Status(Enum):
    PASS = 'pass'
    FAIL = 'fail'
    INCONCLUSIVE = 'inconclusive'


class Certificate:
    """
    Итог проверки: статус, точное число проверенных случаев, нарушения и примечания.

    Контрпримеры хранятся только первые max_counterexamples, счётчики при этом остаются точными.
    Контрпример передаётся фабрикой, чтобы не строить строковые представления для успешных проверок.
    """

    def __init__(self, name: str, max_counterexamples: int = 5):
        self.name = name
        self.max_counterexamples = max_counterexamples
        self.checked = 0
        self.violations = 0
        self.skipped = 0
        self.counterexamples: List[dict] = []
        self.notes: List[str] = []
        self._inconclusive = False

    def __repr__(self):
        return '<Certificate %s: %s, %d checked>' % (self.name, self.status.value, self.checked)

    @property
    def status(self) -> Status:
        if self.violations:
            return Status.FAIL
        if self._inconclusive:
            return Status.INCONCLUSIVE
        return Status.PASS

    @property
    def passed(self) -> bool:
        return self.status is not Status.FAIL

    def check(self, ok: bool, counterexample: Optional[Callable[[], dict]] = None) -> bool:
        return self.check_many(ok, 1, counterexample)

    def check_many(self, ok: bool, count: int, counterexample: Optional[Callable[[], dict]] = None) -> bool:
        """count проверок с одинаковым исходом; на группу сохраняется не больше одного контрпримера."""
        self.checked += count
        if not ok:
            self.violations += count
            if counterexample is not None and len(self.counterexamples) < self.max_counterexamples:
                self.counterexamples.append(counterexample())
        return ok

    def skip(self, note: Optional[str] = None):
        self.skipped += 1
        if note:
            self.note(note)

    def note(self, text: str):
        if text not in self.notes:
            self.notes.append(text)

    def mark_inconclusive(self, note: str):
        self._inconclusive = True
        self.note(note)

    def merge(self, other: 'Certificate') -> 'Certificate':
        """Добавляет к сертификату счётчики, контрпримеры и примечания другого."""
        self.checked += other.checked
        self.violations += other.violations
        self.skipped += other.skipped
        room = self.max_counterexamples - len(self.counterexamples)
        if room > 0:
            self.counterexamples.extend(other.counterexamples[:room])
        for text in other.notes:
            self.note(text)
        self._inconclusive = self._inconclusive or other._inconclusive
        return self
