"""Built-in electrode layouts.

Angles follow the convention used throughout the package: ``theta`` is the
elevation measured from the vertex (Cz at 0), ``phi`` is the azimuth measured
counterclockwise from the right preauricular point, so the nasion sits at
phi = pi/2.  The values below are nominal 10-20 placements; real montage
files override them, since angles are data rather than code.
"""

from __future__ import annotations

import numpy as np

from .containers import Montage

# name: (elevation from vertex, azimuth), degrees
_STANDARD_31 = {
    "Fp1": (90.0, 108.0),
    "Fp2": (90.0, 72.0),
    "F7": (90.0, 144.0),
    "F3": (60.0, 125.0),
    "Fz": (45.0, 90.0),
    "F4": (60.0, 55.0),
    "F8": (90.0, 36.0),
    "FC5": (69.0, 152.0),
    "FC1": (32.0, 135.0),
    "FC2": (32.0, 45.0),
    "FC6": (69.0, 28.0),
    "T7": (90.0, 180.0),
    "C3": (45.0, 180.0),
    "Cz": (0.0, 0.0),
    "C4": (45.0, 0.0),
    "T8": (90.0, 0.0),
    "CP5": (69.0, 208.0),
    "CP1": (32.0, 225.0),
    "CP2": (32.0, 315.0),
    "CP6": (69.0, 332.0),
    "TP9": (108.0, 198.0),
    "TP10": (108.0, 342.0),
    "P7": (90.0, 216.0),
    "P3": (60.0, 235.0),
    "Pz": (45.0, 270.0),
    "P4": (60.0, 305.0),
    "P8": (90.0, 324.0),
    "PO9": (100.0, 240.0),
    "PO10": (100.0, 300.0),
    "O1": (90.0, 252.0),
    "O2": (90.0, 288.0),
}

#: Channel-name prefixes treated as frontal for artifact heuristics.
FRONTAL_PREFIXES = ("Fp", "AF", "F")


def standard_montage_31(radius: float = 0.09) -> Montage:
    """31-channel 10-20 montage with nominal spherical angles."""
    names = list(_STANDARD_31)
    theta = np.deg2rad([_STANDARD_31[n][0] for n in names])
    phi = np.deg2rad([_STANDARD_31[n][1] for n in names])
    return Montage(channel_names=tuple(names), theta=theta, phi=phi, radius=radius)


def frontal_mask(montage: Montage) -> np.ndarray:
    """Boolean mask of frontal channels, identified by 10-20 name prefix."""
    out = np.zeros(montage.n_channels, dtype=bool)
    for i, name in enumerate(montage.channel_names):
        out[i] = name.startswith(FRONTAL_PREFIXES)
    return out
