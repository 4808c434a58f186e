"""
검증 결과 보고 모듈입니다.

## 주요 기능
- CheckResult: 검사 하나의 결과 (suite, id, anchor, status, detail, ms)
- to_json_line: 결과 한 줄을 JSON 으로 직렬화 (numpy/복소수 값 처리)
- summary_table: 모음별 통과/실패 개수를 tabulate grid 로 정리
"""

from dataclasses import asdict, dataclass
import json
import sys
from typing import Optional

import numpy as np
from tabulate import tabulate


STATUSES = ("pass", "fail", "skipped")


@dataclass(frozen=True)
class CheckResult:
    suite: str
    id: str
    anchor: str
    status: str
    detail: Optional[str] = None
    ms: int = 0

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status 는 {STATUSES} 중 하나여야 합니다: {self.status}")

    @property
    def failed(self):
        return self.status == "fail"


# NumPy 타입과 복소수를 처리하기 위한 커스텀 JSONEncoder
class ReportEncoder(json.JSONEncoder):
    def default(self, obj):
        if isinstance(obj, np.integer):
            return int(obj)
        if isinstance(obj, np.floating):
            return float(obj)
        if isinstance(obj, (complex, np.complexfloating)):
            return [float(obj.real), float(obj.imag)]
        if isinstance(obj, np.ndarray):
            return obj.tolist()
        return str(obj)


def to_json_line(result):
    return json.dumps(asdict(result), cls=ReportEncoder, ensure_ascii=False)


def to_json(obj, indent=None):
    return json.dumps(obj, cls=ReportEncoder, ensure_ascii=False, indent=indent)


def write_json_lines(results, stream=None):
    stream = sys.stdout if stream is None else stream
    for result in results:
        stream.write(to_json_line(result) + "\n")
    stream.flush()


def summary_table(results):
    rows = {}
    for r in results:
        row = rows.setdefault(r.suite, {"pass": 0, "fail": 0, "skipped": 0, "ms": 0})
        row[r.status] += 1
        row["ms"] += r.ms
    table = [[suite, c["pass"], c["fail"], c["skipped"], c["ms"]] for suite, c in rows.items()]
    failed = [[r.suite, r.id, r.anchor, (r.detail or "")[:80]] for r in results if r.failed]
    text = tabulate(table, headers=["Suite", "Pass", "Fail", "Skipped", "ms"], tablefmt="grid")
    if failed:
        text += "\n" + tabulate(failed, headers=["Suite", "Check", "Anchor", "Detail"], tablefmt="grid")
    return text


def print_summary(results, stream=None):
    stream = sys.stderr if stream is None else stream
    print("\n" + summary_table(results), file=stream)


def exit_code(results):
    """실패가 하나도 없으면 0, 있으면 1"""
    return 1 if any(r.failed for r in results) else 0
