"""Run configuration: every physics, rendering, and controller default in one
versioned, human-readable record.

A config travels with episode logs and datasets so that replays and ablation
sweeps are reproducible.  CLI flags and keyword overrides take precedence over
the file contents.
"""

from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field

CONFIG_VERSION = 1

# Image geometry: 512 px wide, 612 px tall, 0.25 mm per pixel
# (128 mm x 153 mm field, entry at the bottom edge).
IMAGE_WIDTH = 512
IMAGE_HEIGHT = 612


@dataclass
class RunConfig:
    version: int = CONFIG_VERSION
    seed: int = 0

    # field geometry
    scale_mm_per_px: float = 0.25
    image_width: int = IMAGE_WIDTH
    image_height: int = IMAGE_HEIGHT

    # guidewire physics
    dt: float = 0.04                    # s, 25 Hz control loop
    link_mm: float = 2.0                # backbone link length
    bend_section_mm: float = 20.0       # distal bendable section (10 links)
    kappa_max: float = 0.15             # 1/mm, max distal curvature
    backlash: float = 0.05              # bend actuator deadband (normalized units)
    slip_coeff: float = 0.08            # insertion loss per contacting node
    bend_vel_limit: float = 1.0         # normalized units / s
    translate_vel_limit: float = 15.0   # mm / s
    robot_diameter_mm: float = 5.0
    min_inserted_mm: float = 8.0
    initial_inserted_mm: float = 12.0
    buckle_window_s: float = 1.0
    buckle_ratio: float = 3.0
    buckle_min_contacts: int = 3
    buckle_min_push_mm: float = 1.0
    projection_passes: int = 20

    # fluoroscopy rendering
    background_gray: float = 0.82
    contrast_gray: float = 0.45
    robot_gray: float = 0.05
    noise_sigma: float = 0.02
    contrast_area_ref_px: float = 60000.0
    contrast_full_s: float = 4.0

    # goal encoding
    goal_shift_px: float = 5.0          # rigid perturbation translation bound
    goal_rot_deg: float = 2.0           # rigid perturbation rotation bound

    # PD path following
    pd_kp_translate: float = 0.8        # 1/s
    pd_kd_translate: float = 0.2
    pd_kp_bend: float = 0.04            # 1/px
    pd_kd_bend: float = 0.01
    waypoint_lookahead_px: float = 5.0

    # scripted demonstrator
    demo_inject_travel_mm: float = 25.0
    demo_inject_branch_mm: float = 15.0
    demo_retract_mm: float = 10.0
    demo_noise: float = 0.0

    # episode engine
    timeout_s: float = 60.0

    def to_json(self) -> str:
        return json.dumps(dataclasses.asdict(self), indent=2, sort_keys=True)

    def save(self, path):
        with open(path, "w") as fh:
            fh.write(self.to_json() + "\n")

    @classmethod
    def from_json(cls, text: str) -> "RunConfig":
        raw = json.loads(text)
        version = raw.get("version", 0)
        if version != CONFIG_VERSION:
            raise ValueError(f"unsupported config version {version!r}")
        known = {f.name for f in dataclasses.fields(cls)}
        unknown = set(raw) - known
        if unknown:
            raise ValueError(f"unknown config keys: {sorted(unknown)}")
        return cls(**raw)

    @classmethod
    def load(cls, path) -> "RunConfig":
        with open(path) as fh:
            return cls.from_json(fh.read())

    def replace(self, **overrides) -> "RunConfig":
        return dataclasses.replace(self, **overrides)


DEFAULT_CONFIG = RunConfig()
