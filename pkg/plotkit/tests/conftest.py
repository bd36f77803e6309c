import math

import pytest

HEADER = "gamma_tilde,tau,concurrence,hs_min,trace_min,bell,norm"


def synthetic_csv(path, gammas, n=40):
    """Write a schema-conforming CSV with smooth made-up curves."""
    lines = [HEADER]
    for g in gammas:
        for i in range(n):
            tau = 10.0 * i / (n - 1)
            conc = abs(math.cos(0.4 * tau)) * math.exp(-0.1 * g * tau)
            hs = 0.5 * conc * conc
            tmin = 0.5 + 0.5 * conc
            bell = 2.0 + 0.8 * math.cos(0.4 * tau) * math.exp(-0.05 * g * tau)
            norm = math.exp(0.2 * g * tau)
            lines.append(
                f"{g:.12g},{tau:.12g},{conc:.12g},{hs:.12g},{tmin:.12g},{bell:.12g},{norm:.12g}"
            )
    path.write_text("\n".join(lines) + "\n")
    return str(path)


@pytest.fixture
def overlay_csv(tmp_path):
    return synthetic_csv(tmp_path / "fig5.paper.csv", (0.5, 1.5))


@pytest.fixture
def four_panel_csv(tmp_path):
    return synthetic_csv(tmp_path / "fig1.paper.csv", (0.1, 0.25, 0.5, 1.5))
