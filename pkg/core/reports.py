"""Pass/fail records produced by the verification suites."""
import logging
from dataclasses import dataclass, field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CheckRecord:
    subject: str
    passed: bool
    detail: str = ''

    def as_dict(self):
        return {'subject': self.subject, 'passed': self.passed, 'detail': self.detail}


@dataclass
class SuiteReport:
    """Outcome of one suite: a record per checked instance plus skip counts"""
    suite: str
    records: list = field(default_factory=list)
    skipped: dict = field(default_factory=dict)

    def check(self, subject, passed, detail=''):
        record = CheckRecord(subject, bool(passed), detail)
        if not record.passed:
            logger.warning("%s: %s failed %s", self.suite, subject, detail)
        self.records.append(record)
        return record

    def skip(self, reason, count=1):
        self.skipped[reason] = self.skipped.get(reason, 0) + count

    def extend(self, other):
        self.records.extend(other.records)
        for reason, count in other.skipped.items():
            self.skip(reason, count)

    @property
    def passed(self):
        return all(record.passed for record in self.records)

    @property
    def failures(self):
        return [record for record in self.records if not record.passed]

    def as_payload(self):
        return {
            'suite': self.suite,
            'passed': self.passed,
            'checked': len(self.records),
            'failed': len(self.failures),
            'skipped': dict(sorted(self.skipped.items())),
            'records': [record.as_dict() for record in self.records],
        }
