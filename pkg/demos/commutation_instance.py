"""Walk through both routes of the localization / restrict-twist-induce square
for one instance and show that they agree on every basis element."""
from level0.graded import Element, all_gradings, grading_shape
from level0.localization import build_semisimple_class, c_cusp, gs_slots, verify_cle_diagram, x_cusp_case
from level0.rho_iota import chi_slots
from level0.symbols import cusp_datum
from level0.tame import build_tame_character
from level0.weylrep import ClassFunction


def main():
    chi = build_tame_character(3, 2, [(0, 4), (1, 6)])
    gs = build_semisimple_class(3, 2, [(0, 4), (1, 7)], eta_second={-1: -1})
    cusp = cusp_datum((1, 3), (2, 0), (-1, -1))
    print("cusp:", cusp.label(), "| X_cusp:", x_cusp_case(cusp), "| c_cusp:", c_cusp(gs, cusp))
    slots = chi_slots(chi, cusp)
    print("chi-side slots:", [(s.key, s.kind, s.total) for s in slots])
    print("g_s-side slots:", [(s.key, s.kind, s.total) for s in gs_slots(gs, cusp)])
    agree = total = 0
    for g in all_gradings(slots):
        shape = grading_shape(slots, g)
        for c in shape.classes():
            x = Element.single(slots, g, ClassFunction.indicator(shape, c))
            rep = verify_cle_diagram(chi, gs, cusp, x)
            total += 1
            agree += rep["equal"]
            if total <= 3:
                print(f"\ngrading {g}, class {c}")
                print("  loc(rho_iota(x))          :", rep["lhs"])
                print("  rho_iota(X loc(tilde(x))) :", rep["rhs"])
    print(f"\n{agree}/{total} basis elements commute")


if __name__ == "__main__":
    main()
