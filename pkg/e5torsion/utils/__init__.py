"""
프로젝트 전반에 사용하는 유틸리티 모듈입니다.

## 주요 기능
- utils.py: 인자, config, 로깅, 시드 설정을 위한 함수 모음
- report.py: 검증 결과(CheckResult)의 JSON-lines 출력과 요약 표

"""

from .report import CheckResult, exit_code, print_summary, summary_table, to_json, to_json_line, write_json_lines
from .utils import config_print, debug_print, get_parser, load_config, seed_fix, set_debug_mode, setup_logging
