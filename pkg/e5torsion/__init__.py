"""
Tate 정규형 E₅(b) 의 5-torsion 점을 정확한 산술로 검증하는 패키지입니다.

## 주요 기능
- algebra: Q(ζ₅), 다항식, 유리함수
- curve: Weierstrass 곡선 군 연산, E₅(b), 5-분할다항식, E′ 두 배 공식
- watson: g(X) 에 대한 Watson 풀이 파이프라인과 닫힌 형태
- torsion: 20개 점의 곱 공식과 정확한 검증
- rrcf: Rogers-Ramanujan 연분수의 q-급수와 수치 계산
- suites.py / main.py: 검증 모음과 명령행 도구

"""

from .errors import E5Error
