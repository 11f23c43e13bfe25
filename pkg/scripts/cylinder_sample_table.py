import numpy as np
import script_utility


RHO = 1025.0
G = 9.81
RADIUS = 5.0
MASS = 320000.0
M_INF = 251717.4493

# Radiation impedance c*jw / (1 - w^2 + 1.2jw), causal by construction.
IMPEDANCE_SCALE = 1.2e5
IMPEDANCE_DAMPING = 1.2
EXCITATION_DECAY = 1.2  # s^2


def main() -> None:
    print("Building heaving-cylinder hydro table...")
    omega = 0.02 * np.arange(1, 601)
    stiffness = RHO * G * np.pi * RADIUS**2

    denominator = (1 - omega**2) ** 2 + (IMPEDANCE_DAMPING * omega) ** 2
    radiation_damping = IMPEDANCE_SCALE * IMPEDANCE_DAMPING * omega**2 / denominator
    added_mass = M_INF + IMPEDANCE_SCALE * (1 - omega**2) / denominator
    excitation_gain = stiffness * np.exp(-EXCITATION_DECAY * omega**2)
    excitation_phase = -0.1 * omega

    table = {
        "omega": script_utility.round_significant(omega),
        "added_mass": script_utility.round_significant(added_mass),
        "radiation_damping": script_utility.round_significant(radiation_damping),
        "excitation_gain": script_utility.round_significant(excitation_gain),
        "excitation_phase": script_utility.round_significant(excitation_phase),
        "m_inf": M_INF,
        "mass": MASS,
        "stiffness": script_utility.round_significant(stiffness)[0],
        "radius": RADIUS,
    }
    script_utility.save_as_json(table, "cylinder_sample.json")


if __name__ == "__main__":
    main()
