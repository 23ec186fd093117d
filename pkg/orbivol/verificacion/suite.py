"""
Suite completa de verificación.

ejecutarTodo() corre cada comprobación sobre su rejilla de parámetros por
defecto y devuelve un ReporteEnsayo por combinación, en orden fijo.
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..utilidades.validadores import validarEntero
from .comprobaciones import (
    CotaEntradas,
    CotasElipticas,
    ConteoSeparado,
    NormaDesdeEntradas,
    PerturbacionProducto,
)
from .reporte import ReporteEnsayo, ejecutarComprobacion

registro = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConfiguracionVerificacion:
    """
    Parámetros de la suite de verificación.

    Atributos:
        ensayos: Ensayos por combinación de parámetros
        semilla: Semilla maestra
        trabajadores: Hilos por comprobación (no altera los reportes)
        dimensionesElipticas, ordenesElipticos: Rejilla (n, k) de CotasElipticas
        incluirDirigido: Añade una corrida en la configuración de igualdad por cada k
        casosEntradas: Pares (n, r) de CotaEntradas
        casosNorma: Pares (n, d) de NormaDesdeEntradas
        casosPerturbacion: Ternas (n, K, L) de PerturbacionProducto
        casosConteo: Ternas (p, q, s) de ConteoSeparado
    """
    ensayos: int = 10_000
    semilla: int = 0
    trabajadores: int = 1
    dimensionesElipticas: Tuple[int, ...] = (2, 3, 4, 5, 6)
    ordenesElipticos: Tuple[int, ...] = (2, 3, 5, 7)
    incluirDirigido: bool = True
    casosEntradas: Tuple[Tuple[int, float], ...] = (
        (2, 0.25), (2, 1.0), (2, 3.0),
        (3, 0.25), (3, 1.0), (3, 3.0),
        (5, 0.25), (5, 1.0), (5, 3.0),
    )
    casosNorma: Tuple[Tuple[int, float], ...] = ((3, 1.0),)
    casosPerturbacion: Tuple[Tuple[int, float, float], ...] = ((3, 10.0, 0.1),)
    casosConteo: Tuple[Tuple[int, float, float], ...] = ((1, 1.0, 2.0), (2, 1.0, 1.0), (3, 1.0, 0.5))

    def __post_init__(self) -> None:
        object.__setattr__(self, "ensayos", validarEntero(self.ensayos, 0, "ensayos"))
        object.__setattr__(self, "semilla", validarEntero(self.semilla, 0, "semilla"))
        object.__setattr__(self, "trabajadores", validarEntero(self.trabajadores, 1, "trabajadores"))


def _comprobaciones(configuracion: ConfiguracionVerificacion) -> list:
    comprobaciones = [
        CotasElipticas(n, k)
        for n in configuracion.dimensionesElipticas
        for k in configuracion.ordenesElipticos
    ]
    if configuracion.incluirDirigido:
        n = min(configuracion.dimensionesElipticas)
        comprobaciones += [CotasElipticas(n, k, dirigido=True) for k in configuracion.ordenesElipticos]

    comprobaciones += [CotaEntradas(n, r) for n, r in configuracion.casosEntradas]
    comprobaciones += [NormaDesdeEntradas(n, d) for n, d in configuracion.casosNorma]
    comprobaciones += [PerturbacionProducto(n, K, L) for n, K, L in configuracion.casosPerturbacion]
    comprobaciones += [ConteoSeparado(p, q, s) for p, q, s in configuracion.casosConteo]
    return comprobaciones


def ejecutarTodo(configuracion: ConfiguracionVerificacion = ConfiguracionVerificacion()) -> List[ReporteEnsayo]:
    """
    Ejecuta todas las comprobaciones.

    Las semillas de cada ensayo se derivan de (semilla maestra, lema, índice),
    así que el resultado es reproducible e independiente del orden.

    Args:
        configuracion: ConfiguracionVerificacion

    Returns:
        Lista de ReporteEnsayo en orden fijo
    """
    reportes = [
        ejecutarComprobacion(comprobacion, configuracion.ensayos, configuracion.semilla, configuracion.trabajadores)
        for comprobacion in _comprobaciones(configuracion)
    ]

    violaciones = sum(reporte.violaciones for reporte in reportes)
    registro.info(
        "Suite completa: %d comprobaciones, %d violaciones, %.2f s",
        len(reportes), violaciones, sum(reporte.duracion for reporte in reportes),
    )
    return reportes


def exitoTotal(reportes: Sequence[ReporteEnsayo]) -> bool:
    """True si ningún reporte tiene violaciones."""
    return all(reporte.exito for reporte in reportes)
