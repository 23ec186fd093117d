"""
Verificación de Orbivol - Ensayos aleatorios con semilla de cada desigualdad.
"""

# Imports locales
from .comprobaciones import (
    ConteoSeparado,
    CotaEntradas,
    CotasElipticas,
    NormaDesdeEntradas,
    PerturbacionProducto,
    comprobarConteoSeparado,
    comprobarCotaEntradas,
    comprobarCotasElipticas,
    comprobarNormaDesdeEntradas,
    comprobarPerturbacionProducto,
)
from .reporte import (
    ReporteEnsayo,
    derivarSemilla,
    ejecutarComprobacion,
    holguraInferior,
    holguraSuperior,
)
from .suite import ConfiguracionVerificacion, ejecutarTodo, exitoTotal

__all__ = [
    "ConfiguracionVerificacion",
    "ConteoSeparado",
    "CotaEntradas",
    "CotasElipticas",
    "NormaDesdeEntradas",
    "PerturbacionProducto",
    "ReporteEnsayo",
    "comprobarConteoSeparado",
    "comprobarCotaEntradas",
    "comprobarCotasElipticas",
    "comprobarNormaDesdeEntradas",
    "comprobarPerturbacionProducto",
    "derivarSemilla",
    "ejecutarComprobacion",
    "ejecutarTodo",
    "exitoTotal",
    "holguraInferior",
    "holguraSuperior",
]
