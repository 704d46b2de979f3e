"""Deterministic verification reports.

A report is a list of case records.  Each record names the identity that was
checked, the parameters of the check, whether it passed, how many concrete
instances it covered and (on failure) a witness.  Records keep insertion
order, and the checkers iterate their parameter spaces lexicographically, so
the same parameters and seed always give the same JSON text.
"""

import json


def _plain(value):
    """Convert nested values into JSON-friendly lists, ints and strings."""
    if hasattr(value, "to_plain"):
        return value.to_plain()
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, int, float, str)) or value is None:
        return value
    return repr(value)


class Report:
    def __init__(self, suite, params=None, seed=None):
        self.suite = suite
        self.params = dict(params or {})
        self.seed = seed
        self.records = []

    def record(self, case, params, passed, witness=None, count=1):
        rec = {
            "case": case,
            "params": _plain(params),
            "pass": bool(passed),
            "count": int(count),
            "witness": None if passed else _plain(witness),
        }
        self.records.append(rec)
        return rec

    def extend(self, other):
        """Append every record of another report, prefixing its suite name."""
        for rec in other.records:
            rec = dict(rec)
            rec["case"] = f"{other.suite}/{rec['case']}"
            self.records.append(rec)
        return self

    @property
    def failures(self):
        return [r for r in self.records if not r["pass"]]

    @property
    def ok(self):
        return not self.failures

    def summary(self):
        n_fail = len(self.failures)
        return {
            "records": len(self.records),
            "passed": len(self.records) - n_fail,
            "failed": n_fail,
            "instances": sum(r["count"] for r in self.records),
        }

    def failed_cases(self):
        return sorted({r["case"] for r in self.failures})

    def to_dict(self):
        return {
            "suite": self.suite,
            "params": _plain(self.params),
            "seed": self.seed,
            "summary": self.summary(),
            "records": self.records,
        }

    def to_json(self, indent=2):
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True, ensure_ascii=False)

    def __repr__(self):
        s = self.summary()
        return f"Report({self.suite!r}, {s['passed']}/{s['records']} passed)"


class Tally:
    """Accumulates many instances of one case into a single record.

    Only the first failing instance is kept as the witness.
    """

    def __init__(self, report, case, params):
        self.report = report
        self.case = case
        self.params = params
        self.count = 0
        self.failed = False
        self.witness = None

    def check(self, ok, witness=None):
        self.count += 1
        if not ok and not self.failed:
            self.failed = True
            self.witness = witness() if callable(witness) else witness
        return ok

    def close(self):
        if self.count:
            self.report.record(self.case, self.params, not self.failed,
                               self.witness, self.count)
