"""
프로젝트 전반에서 사용하는 예외 모음입니다.

모든 예외는 E5Error를 상속하며, 표준 예외 계층(ZeroDivisionError, ValueError 등)도
함께 상속하므로 호출하는 쪽에서 표준 예외로 잡아도 동작합니다.
"""


class E5Error(Exception):
    pass


class PoleError(E5Error, ZeroDivisionError):
    """0으로 나누기, 극점에서의 함숫값 계산"""


class VariableMismatchError(E5Error, ValueError):
    """서로 다른 변수의 다항식/유리함수를 섞어 연산한 경우"""


class DegenerateSubstitutionError(E5Error, ValueError):
    """0/0 이 되는 합성, ad-bc=0 인 일차분수변환"""


class SingularCurveError(E5Error, ValueError):
    pass


class ExactDivisionError(E5Error, ArithmeticError):
    """나누어떨어져야 하는 나눗셈에서 나머지가 생긴 경우 (구현 버그 신호)"""


class IdentityError(E5Error, AssertionError):
    """정확한 항등식 검증이 실패한 경우"""


class InsufficientPrecisionError(E5Error, ValueError):
    pass


class ConvergenceError(E5Error, RuntimeError):
    pass


class ToleranceError(E5Error, AssertionError):
    pass


class DegenerateResolventError(E5Error, ValueError):
    """θ = 0 또는 θ = ±C 여서 근의 공식을 적용할 수 없는 경우"""
