"""Binary delimiter words used to join strings into one."""
from __future__ import annotations

from ..strcore import mirror


def bin_(j: int) -> str:
    """Binary representation of ``j`` without the leading one (``bin_(1) == ""``)."""
    if j < 1:
        raise ValueError(f"bin is defined for positive integers, got {j}")
    return format(j, "b")[1:]


def pad(i: int, s: str) -> str:
    """``1^(i-1) 0 s``."""
    if i < 1:
        raise ValueError(f"pad width must be positive, got {i}")
    return "1" * (i - 1) + "0" + s


def chain_pieces(s: str, K: int) -> list[str]:
    """Padded strings and their mirrors whose concatenation is ``chain(s, K)``.

    With ``s = s' 0^i`` (``s'`` empty or ending in 1) the order is
    ``pad^R(s), pad(s'), pad^R(s'), ..., pad(s'0^(i-1)), pad^R(s'0^(i-1)), pad(s)``.
    """
    width = K - len(s)
    if width < 2:
        raise ValueError(f"|s| = {len(s)} too long for K = {K}")
    stem = s.rstrip("0")
    out = [mirror(pad(width, s))]
    for k in range(len(s) - len(stem)):
        p = pad(width, stem + "0" * k)
        out += [p, mirror(p)]
    out.append(pad(width, s))
    return out


def chain(s: str, K: int) -> str:
    return "".join(chain_pieces(s, K))


def delimiter_pieces(j: int, K: int) -> list[str]:
    """Pieces a witness selects inside delimiter ``d_j``.

    ``d_1 = 0 1^(K-1) 1^(K(K-1)/2) 1^(K-1) 0`` splits as ``0 1^(K-1)``, the
    runs ``1, 11, ..., 1^(K-1)`` and ``1^(K-1) 0``; the middle block has room
    for exactly those runs.
    """
    if K < 2:
        raise ValueError("K must be at least 2")
    if j < 1:
        raise ValueError(f"delimiter index must be positive, got {j}")
    if j == 1:
        return ["0" + "1" * (K - 1), *("1" * r for r in range(1, K)), "1" * (K - 1) + "0"]
    return chain_pieces(bin_(j), K)


def delimiter(j: int, K: int) -> str:
    return "".join(delimiter_pieces(j, K))
