"""Built-in problems: wave, potential KdV, nonlinear scalar fields and
Maxwell (abelian 1-form gauge field) in three and four dimensions."""

from __future__ import annotations

from .problem import Problem, loads

WAVE2D = """\
[vars]
independent = x, t
dependent = u

[equations]
u_tt = u_xx

[lagrangian]
1/2*u_t^2 - 1/2*u_x^2
"""

PKDV = """\
[vars]
independent = x, t
dependent = v

[equations]
v_t = 1/2*v_x^2 + v_xxx

[lagrangian]
1/2*v_x*v_t - v_x^3/6 + 1/2*v_xx^2
"""


def scalar_field(n: int) -> str:
    """u_tt = Laplacian(u) - u^3 with n - 1 space dimensions."""
    space = ["x", "y", "z"][: n - 1]
    indep = ", ".join(space + ["t"])
    lap = " + ".join(f"u_{s}{s}" for s in space)
    grad = " - ".join(f"1/2*u_{s}^2" for s in space)
    return (f"[vars]\nindependent = {indep}\ndependent = u\n\n"
            f"[equations]\nu_tt = {lap} - u^3\n\n"
            f"[lagrangian]\n1/2*u_t^2 - {grad} - 1/4*u^4\n")


def maxwell(n: int) -> str:
    """d*dA = 0 for a 1-form A = a0 dt + a1 dx + ... in n dimensions.

    Each spatial component is solved for its second time derivative and the
    constraint (Gauss law) for a1_{xt}; a0 stays a free gauge coordinate.
    """
    space = ["x", "y", "z"][: n - 1]
    comps = [f"a{k}" for k in range(1, n)]
    lines = []
    for k, (s, a) in enumerate(zip(space, comps)):
        rhs = [f"a0_{s}t"]
        for s2, a2 in zip(space, comps):
            if a2 != a:
                rhs.append(f"{a}_{s2}{s2} - {a2}_{s}{s2}")
        lines.append(f"{a}_tt = " + " + ".join(rhs))
    gauss = " + ".join(f"a0_{s}{s}" for s in space)
    gauss += "".join(f" - {a}_{s}t" for s, a in zip(space[1:], comps[1:]))
    lines.append(f"a1_xt = {gauss}")
    electric = " + ".join(f"1/2*(a{k}_t - a0_{s})^2" for k, s in enumerate(space, 1))
    magnetic = " ".join(f"- 1/2*({comps[j]}_{space[i]} - {comps[i]}_{space[j]})^2"
                        for i in range(len(space)) for j in range(i + 1, len(space)))
    deps = ", ".join(["a0"] + comps)
    return (f"[vars]\nindependent = {', '.join(space + ['t'])}\ndependent = {deps}\n\n"
            f"[equations]\n" + "\n".join(lines) + "\n\n"
            f"[lagrangian]\n{electric} {magnetic}\n")


ENTRIES = {
    "wave2d": [("wave2d", WAVE2D)],
    "pkdv": [("pkdv", PKDV)],
    "scalar_field_nd": [(f"scalar_field_{n}d", scalar_field(n)) for n in (2, 3, 4)],
    "maxwell3d": [("maxwell3d", maxwell(3))],
    "maxwell4d": [("maxwell4d", maxwell(4))],
}


def names() -> list[str]:
    return list(ENTRIES)


def problems(name: str, max_order: int | None = None) -> list[Problem]:
    if name not in ENTRIES:
        raise KeyError(f"unknown corpus entry {name!r}; available: {', '.join(ENTRIES)}")
    return [loads(text, label, max_order) for label, text in ENTRIES[name]]


__all__ = ["ENTRIES", "names", "problems", "scalar_field", "maxwell", "WAVE2D", "PKDV"]
