"""
CHSH戦略の生成モジュール。

標準戦略、回転戦略、ランダム戦略、ノイズ付き戦略、退化戦略を生成し、
コマンドラインの戦略指定（"canonical", "degenerate:psi-minus", "file:path" など）を解釈します。
"""
from dataclasses import dataclass
from enum import Enum

import numpy as np
from scipy.linalg import expm

from chsh.canonical import BellState, basis_ket, bell_state, h_prime, hadamard, pauli_x, pauli_z, y_rotation
from chsh.model import CHSHStrategy
from core.exceptions import ConfigError
from core.messages import msg
from linalg.dense import ComplexMatrix, ComplexVector, dagger, identity
from linalg.spectral import herm_fun, signum
from strategies.strategy_file import load_strategy


# =============================================================================
# 列挙型とデータクラス
# =============================================================================

class StrategyKind(Enum):
    """戦略の種類。"""
    CANONICAL = "canonical"
    ROTATED = "rotated"
    NOISY = "noisy"
    RANDOM = "random"
    DEGENERATE = "degenerate"
    FILE = "file"


class DegenerateName(Enum):
    """退化戦略の名前。"""
    PSI_MINUS = "psi-minus"   # ψ = Ψ⁻、標準の観測量
    PSI_PLUS = "psi-plus"     # ψ = Ψ⁺、標準の観測量
    CLASSICAL = "classical"   # A_i = B_j = Z、ψ = |00⟩
    GAP = "gap"               # 標準の Alice、B0 = B1 = Z、ψ = Φ⁺


@dataclass(frozen=True)
class StrategySpec:
    """
    戦略の指定。

    Attributes
    ----------
    kind : StrategyKind
        戦略の種類
    theta_a, theta_b : float
        回転戦略の角度（ラジアン）
    seed : int
        乱数シード（ランダム戦略・ノイズ付き戦略）
    magnitude : float
        ノイズの大きさ（0以上）
    dim_a, dim_b : int
        ランダム戦略の次元（1以上）
    name : str
        退化戦略の名前
    path : str
        戦略ファイルのパス
    """
    kind: StrategyKind
    theta_a: float = 0.0
    theta_b: float = 0.0
    seed: int = 0
    magnitude: float = 0.0
    dim_a: int = 2
    dim_b: int = 2
    name: str = ""
    path: str = ""

    def __post_init__(self) -> None:
        if not self.magnitude >= 0.0:
            raise ConfigError(msg("config_bad_magnitude", magnitude=self.magnitude))
        if self.dim_a < 1 or self.dim_b < 1:
            raise ConfigError(msg("config_bad_dims", dims=(self.dim_a, self.dim_b)))

    @property
    def label(self) -> str:
        """レポート用の短い表示名。"""
        match self.kind:
            case StrategyKind.ROTATED:
                return f"rotated(θA={self.theta_a}, θB={self.theta_b})"
            case StrategyKind.NOISY:
                return f"noisy(seed={self.seed}, magnitude={self.magnitude})"
            case StrategyKind.RANDOM:
                return f"random({self.dim_a}x{self.dim_b}, seed={self.seed})"
            case StrategyKind.DEGENERATE:
                return f"degenerate:{self.name}"
            case StrategyKind.FILE:
                return f"file:{self.path}"
        return self.kind.value


def parse_strategy_spec(text: str, **params) -> StrategySpec:
    """
    戦略指定文字列を StrategySpec に変換する。

    Parameters
    ----------
    text : str
        "canonical", "rotated", "noisy", "random", "degenerate:<name>", "file:<path>"
    **params
        theta_a, theta_b, seed, magnitude, dim_a, dim_b

    Returns
    -------
    StrategySpec
        戦略の指定

    Raises
    ------
    ConfigError
        未対応の指定の場合
    """
    head, _, tail = text.partition(":")
    available = ", ".join(
        [kind.value for kind in StrategyKind if kind not in (StrategyKind.DEGENERATE, StrategyKind.FILE)]
        + [f"degenerate:{name.value}" for name in DegenerateName]
        + ["file:<path>"]
    )
    try:
        kind = StrategyKind(head)
    except ValueError:
        raise ConfigError(msg("config_unknown_strategy", spec=text, available=available))

    if kind is StrategyKind.DEGENERATE:
        if tail not in {name.value for name in DegenerateName}:
            raise ConfigError(msg("config_unknown_strategy", spec=text, available=available))
        return StrategySpec(kind=kind, name=tail)
    if kind is StrategyKind.FILE:
        if not tail:
            raise ConfigError(msg("config_unknown_strategy", spec=text, available=available))
        return StrategySpec(kind=kind, path=tail)
    if tail:
        raise ConfigError(msg("config_unknown_strategy", spec=text, available=available))
    return StrategySpec(kind=kind, **params)


# =============================================================================
# 乱数による行列・ベクトル
# =============================================================================

def random_hermitian(rng: np.random.Generator, d: int) -> ComplexMatrix:
    """
    実部・虚部を [−1, 1] の一様分布から取り、(G + G†)/2 で対称化した行列を返す。
    """
    G = rng.uniform(-1.0, 1.0, (d, d)) + 1j * rng.uniform(-1.0, 1.0, (d, d))
    return (G + dagger(G)) / 2.0


def random_unit_vector(rng: np.random.Generator, d: int) -> ComplexVector:
    """実部・虚部を [−1, 1] の一様分布から取った単位ベクトル。"""
    v = rng.uniform(-1.0, 1.0, d) + 1j * rng.uniform(-1.0, 1.0, d)
    return v / np.linalg.norm(v)


def random_binary_observable(rng: np.random.Generator, d: int) -> ComplexMatrix:
    """
    ランダムなエルミート行列の符号 sign(G) を返す。

    G はトレースを引いて中心化する（d ≥ 2 なら ±1 の固有空間がともに空でない）。
    """
    G = random_hermitian(rng, d)
    G = G - (np.trace(G).real / d) * identity(d)
    return herm_fun(G, signum)


# =============================================================================
# 生成関数
# =============================================================================

def canonical_strategy() -> CHSHStrategy:
    """標準EPR戦略 ψ = Φ⁺, A0 = Z, A1 = X, B0 = H, B1 = H′。"""
    return CHSHStrategy.create(
        psi=bell_state(BellState.PHI_PLUS),
        A0=pauli_z(),
        A1=pauli_x(),
        B0=hadamard(),
        B1=h_prime(),
    )


def rotated_strategy(theta_a: float, theta_b: float) -> CHSHStrategy:
    """
    標準戦略の観測量を Y 軸まわりに回転した戦略を返す。

    Alice の観測量を exp(−iθ_A Y/2)、Bob の観測量を exp(−iθ_B Y/2) で共役変換し、
    ψ は Φ⁺ のままとする。Φ⁺ は実ユニタリ U について U⊗U で不変なので、
    θ_A = θ_B の場合はバイアスが 2√2 のまま変わらない。
    """
    UA = y_rotation(theta_a)
    UB = y_rotation(theta_b)
    return CHSHStrategy.create(
        psi=bell_state(BellState.PHI_PLUS),
        A0=UA @ pauli_z() @ dagger(UA),
        A1=UA @ pauli_x() @ dagger(UA),
        B0=UB @ hadamard() @ dagger(UB),
        B1=UB @ h_prime() @ dagger(UB),
    )


def random_strategy(dim_a: int, dim_b: int, seed: int) -> CHSHStrategy:
    """
    シード付きのランダム戦略を返す。

    観測量は A0, A1, B0, B1 の順に random_binary_observable で生成し、
    最後に共有状態を生成する。同じ引数なら同じ戦略を返す。

    Parameters
    ----------
    dim_a, dim_b : int
        Alice / Bob の次元
    seed : int
        乱数シード

    Returns
    -------
    CHSHStrategy
        有効な戦略
    """
    if dim_a < 1 or dim_b < 1:
        raise ConfigError(msg("config_bad_dims", dims=(dim_a, dim_b)))
    rng = np.random.default_rng(seed)
    A0 = random_binary_observable(rng, dim_a)
    A1 = random_binary_observable(rng, dim_a)
    B0 = random_binary_observable(rng, dim_b)
    B1 = random_binary_observable(rng, dim_b)
    psi = random_unit_vector(rng, dim_a * dim_b)
    return CHSHStrategy.create(psi=psi, A0=A0, A1=A1, B0=B0, B1=B1)


def noisy_strategy(seed: int, magnitude: float) -> CHSHStrategy:
    """
    標準戦略にシード付きのノイズを加えた戦略を返す。

    各観測量を exp(−i·magnitude·G)（G はランダムなエルミート行列）で共役変換し、
    ψ = normalize(Φ⁺ + magnitude·g) とする。magnitude = 0 なら標準戦略。
    """
    if not magnitude >= 0.0:
        raise ConfigError(msg("config_bad_magnitude", magnitude=magnitude))
    rng = np.random.default_rng(seed)
    observables = []
    for ideal in (pauli_z(), pauli_x(), hadamard(), h_prime()):
        U = expm(-1j * magnitude * random_hermitian(rng, 2))
        observables.append(U @ ideal @ dagger(U))
    g = rng.uniform(-1.0, 1.0, 4) + 1j * rng.uniform(-1.0, 1.0, 4)
    psi = bell_state(BellState.PHI_PLUS) + magnitude * g
    A0, A1, B0, B1 = observables
    return CHSHStrategy.create(psi=psi / np.linalg.norm(psi), A0=A0, A1=A1, B0=B0, B1=B1)


def degenerate_strategy(name: DegenerateName | str) -> CHSHStrategy:
    """
    定理の領域外にある退化戦略を返す。

    psi-minus / psi-plus は抽出後の Φ⁺ 成分がゼロになり、
    classical と gap はバイアスが 2 にとどまる。
    """
    name = DegenerateName(name)
    Z = pauli_z()
    match name:
        case DegenerateName.PSI_MINUS | DegenerateName.PSI_PLUS:
            kind = BellState.PSI_MINUS if name is DegenerateName.PSI_MINUS else BellState.PSI_PLUS
            return CHSHStrategy.create(psi=bell_state(kind), A0=Z, A1=pauli_x(), B0=hadamard(), B1=h_prime())
        case DegenerateName.CLASSICAL:
            return CHSHStrategy.create(psi=basis_ket(0, 4), A0=Z, A1=Z, B0=Z, B1=Z)
        case DegenerateName.GAP:
            return CHSHStrategy.create(psi=bell_state(BellState.PHI_PLUS), A0=Z, A1=pauli_x(), B0=Z, B1=Z)


def build_strategy(spec: StrategySpec) -> CHSHStrategy:
    """StrategySpec から戦略を生成する。"""
    match spec.kind:
        case StrategyKind.CANONICAL:
            return canonical_strategy()
        case StrategyKind.ROTATED:
            return rotated_strategy(spec.theta_a, spec.theta_b)
        case StrategyKind.NOISY:
            return noisy_strategy(spec.seed, spec.magnitude)
        case StrategyKind.RANDOM:
            return random_strategy(spec.dim_a, spec.dim_b, spec.seed)
        case StrategyKind.DEGENERATE:
            return degenerate_strategy(spec.name)
        case StrategyKind.FILE:
            return load_strategy(spec.path)
    raise ConfigError(msg("config_unknown_strategy", spec=spec.kind, available=""))
