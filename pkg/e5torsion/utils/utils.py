import argparse
import logging
import os
import random
import sys

import numpy as np
import yaml


DEBUG_MODE = False
CONFIG_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))), "config")
SAMPLE_CONFIG = "config-sample.yaml"


def set_debug_mode(debug_mode):
    global DEBUG_MODE
    DEBUG_MODE = debug_mode

    debug_print("DEBUG_MODE가 설정되었습니다.")


def debug_print(text):
    if DEBUG_MODE:
        print(text, file=sys.stderr)


def setup_logging(debug=False):
    logging.basicConfig(
        level=logging.DEBUG if debug else logging.INFO,
        format="%(asctime)s - %(levelname)s - %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
    )


# config parser로 가져오기
def get_parser():
    parser = argparse.ArgumentParser(prog="e5torsion", description="E₅(b) 5-torsion 검증 도구")
    parser.add_argument("--config", type=str, default="config.yaml")  # 입력 없을 시, 기본값으로 config.yaml을 가져옴
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="검증 모음 실행")
    verify.add_argument("suite", nargs="?", default=None)
    verify.add_argument("--suite", dest="suite_flag", default=None)
    verify.add_argument("--terms", type=int, default=None)
    verify.add_argument("--tol", type=float, default=None)
    verify.add_argument("--jobs", type=int, default=None)
    verify.add_argument("--json", action="store_true")

    evaluate = sub.add_parser("eval", help="τ 에서 r(τ), b, u, 좌표를 수치 계산")
    evaluate.add_argument("re", type=float)
    evaluate.add_argument("im", type=float)
    evaluate.add_argument("--tol", type=float, default=None)

    points = sub.add_parser("points", help="구체적인 u 또는 b 에서 20개 점 계산")
    points.add_argument("value", help='"u=<정확한 값>", "b=<값>" 또는 "p/q" (b)')
    points.add_argument("--tol", type=float, default=None)
    return parser


def load_config(name="config.yaml"):
    """config/<name> 을 읽고, 없으면 config-sample.yaml 을 사용합니다."""
    path = os.path.join(CONFIG_DIR, name)
    if not os.path.exists(path):
        debug_print(f"경고: {path} 가 없어 {SAMPLE_CONFIG} 를 사용합니다.")
        path = os.path.join(CONFIG_DIR, SAMPLE_CONFIG)
    with open(path, encoding="utf-8") as f:
        return yaml.safe_load(f) or {}


# config 확인 (print), stdout 은 JSON 출력용이므로 stderr 로 출력
def config_print(config, depth=0):
    if depth == 0:
        print("*" * 40, file=sys.stderr)
    for k, v in config.items():
        prefix = ["\t" * depth, k, ":"]

        if isinstance(v, dict):
            print(*prefix, file=sys.stderr)
            config_print(v, depth + 1)
        else:
            prefix.append(v)
            print(*prefix, file=sys.stderr)
    if depth == 0:
        print("*" * 40, file=sys.stderr)


# seed 고정
def seed_fix(SEED=456):
    random.seed(SEED)
    np.random.seed(SEED)
