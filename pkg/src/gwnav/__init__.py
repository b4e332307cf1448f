"""gwnav: 2D soft-guidewire navigation sandbox.

Modular vessel mazes, quasi-static guidewire dynamics, simulated fluoroscopy
with contrast-dye flow, goal feature maps, tip tracking, baseline controllers,
a 25 Hz episode engine, a demonstration dataset pipeline, and a WebSocket
teleoperation gateway.
"""

from .config import DEFAULT_CONFIG, RunConfig
from .vessels import (
    Aneurysm,
    BlockLibrary,
    BlockSpec,
    MazeSpec,
    VesselMap,
    centerline_path,
    compose_maze,
    count_mazes,
    enumerate_mazes,
    load_library,
    rasterize,
)

__version__ = "0.1.0"
