"""Print the transform matrix and its square for a few Jordan multisets under
both conventions for the sign attached to the source vector."""
from level0.fourier import FourierConfig, fourier_matrix, involution_check

ORBITS = [(2,), (3,), (4, 2), (3, 1), (3, 2), (3, 3, 1)]


def main():
    for cfg in (FourierConfig(), FourierConfig(1, "trivial")):
        print(f"== sigma_U={cfg.sigma_U} sigma_eps={cfg.sigma_eps}")
        for blocks in ORBITS:
            labels, M = fourier_matrix(blocks, cfg)
            rep = involution_check(blocks, cfg)
            print(f"Jord={blocks}  basis={labels}")
            print("  F   =", M.tolist())
            print("  F^2 =", (M @ M).tolist())
            print(f"  -> {rep['relation']} scale={rep['scale']} detail={rep['detail']}")
        print()


if __name__ == "__main__":
    main()
