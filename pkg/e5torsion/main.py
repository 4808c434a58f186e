import logging
import sys

from .algebra.serialize import cyclo_to_str, parse_exact
from .errors import E5Error
from .rrcf.modular import numeric_torsion_check
from .rrcf.numeric import TauPoint
from .suites import DEFAULT_TAUS, VerifyOptions, run_suite, suite_names
from .torsion.points import exact_points, numeric_points
from .utils.report import exit_code, print_summary, to_json, write_json_lines
from .utils.utils import config_print, get_parser, load_config, seed_fix, set_debug_mode, setup_logging


logger = logging.getLogger(__name__)

USAGE_ERROR = 2


def _pick(flag, section, key, default):
    # 명령행 인자가 config 값보다 우선
    if flag is not None:
        return flag
    return section.get(key, default)


def cmd_verify(args, CFG):
    suite = args.suite_flag or args.suite or "all"
    if suite not in suite_names():
        print(f"알 수 없는 검증 모음입니다: {suite} (가능한 값: {', '.join(suite_names())})", file=sys.stderr)
        return USAGE_ERROR

    verify_cfg = CFG.get("verify", {})
    numeric_cfg = CFG.get("numeric", {})
    taus = numeric_cfg.get("sample_taus") or DEFAULT_TAUS
    opts = VerifyOptions(
        terms=int(_pick(args.terms, verify_cfg, "terms", 60)),
        # YAML 1.1 에서 1e-9 는 문자열로 읽히므로 float 변환
        tol=float(_pick(args.tol, verify_cfg, "tol", 1e-9)),
        taus=tuple((float(re), float(im)) for re, im in taus),
        max_terms=int(numeric_cfg.get("max_terms", 2000)),
        seed=int(CFG.get("SEED", 456)),
        timing=bool(verify_cfg.get("timing", False)),
    )
    jobs = int(_pick(args.jobs, verify_cfg, "jobs", 0))
    if opts.terms < 1 or opts.tol <= 0 or jobs < 0:
        print("--terms 는 1 이상, --tol 은 양수, --jobs 는 0 이상이어야 합니다.", file=sys.stderr)
        return USAGE_ERROR

    results = run_suite(suite, opts, jobs=jobs, progress=not args.json)
    write_json_lines(results)
    print_summary(results)
    return exit_code(results)


def cmd_eval(args, CFG):
    if not args.im > 0:
        print(f"τ 는 상반평면에 있어야 합니다 (Im τ = {args.im}).", file=sys.stderr)
        return USAGE_ERROR
    tol = float(_pick(args.tol, CFG.get("eval", {}), "tol", 1e-9))
    tau = TauPoint(args.re, args.im)
    try:
        result = numeric_torsion_check(tau, tol)
    except E5Error as e:
        logger.error(f"τ = {tau} 계산 실패: {e}")
        print(to_json({"tau": [tau.re, tau.im], "error": f"{type(e).__name__}: {e}"}))
        return 1
    result["tau"] = [tau.re, tau.im]
    result["tol"] = tol
    print(to_json(result, indent=2))
    return 0 if result["passed"] else 1


def _exact_points_json(u):
    b, points = exact_points(u)
    return {
        "input": "u",
        "u": cyclo_to_str(u),
        "b": cyclo_to_str(b),
        "exact": True,
        "points": [{"label": str(label), "X": cyclo_to_str(P.x), "Y": cyclo_to_str(P.y)} for label, P in points],
    }


def _numeric_points_json(b, tol):
    # b 가 특이 곡선을 주면 여기서 SingularCurveError
    u, points = numeric_points(b, tol=tol)
    return {
        "input": "b",
        "b": cyclo_to_str(b),
        "u": u,
        "exact": False,
        "points": [{"label": str(label), "X": P.x, "Y": P.y} for label, P in points],
    }


def cmd_points(args, CFG):
    text = args.value.strip()
    tol = float(_pick(args.tol, CFG.get("eval", {}), "tol", 1e-9))
    try:
        if text.startswith("u="):
            value = parse_exact(text[2:])
        else:
            value = parse_exact(text[2:] if text.startswith("b=") else text)
    except (ValueError, ZeroDivisionError) as e:
        print(f"정확한 값으로 읽을 수 없습니다: {text!r} ({e})", file=sys.stderr)
        return USAGE_ERROR

    try:
        if text.startswith("u="):
            payload = _exact_points_json(value)
        else:
            payload = _numeric_points_json(value, tol)
    except E5Error as e:
        logger.error(f"{text} 에서 점 계산 실패: {e}")
        print(to_json({"input": text, "error": f"{type(e).__name__}: {e}"}))
        return 1
    print(to_json(payload, indent=2))
    return 0


COMMANDS = {"verify": cmd_verify, "eval": cmd_eval, "points": cmd_points}


def main(argv=None):
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    # parser을 사용하여 yaml 가져오기 & parser 입력이 없으면, config-sample.yaml 가져오기
    CFG = load_config(args.config)

    # default는 False, Debug 동작설정
    debug = CFG.get("DEBUG", False)
    set_debug_mode(debug)
    setup_logging(debug)
    if debug:
        config_print(CFG)

    seed_fix(CFG.get("SEED", 456))
    return COMMANDS[args.command](args, CFG)


if __name__ == "__main__":
    sys.exit(main())
