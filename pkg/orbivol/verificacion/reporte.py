"""
Reportes de ensayos y ejecución determinista de comprobaciones.

Cada ensayo recibe su propia semilla, derivada de la semilla maestra, del
identificador del lema y del índice del ensayo; así los reportes no
dependen del orden de ejecución ni del número de hilos.
"""

import logging
import math
import time
import zlib
from dataclasses import dataclass
from typing import Any, Dict, Optional

import numpy as np

from ..nucleo.base import ComprobacionDesigualdad
from ..nucleo.configuracion import UMBRAL_HOLGURA
from ..nucleo.excepciones import ErrorValidacion
from ..utilidades.paralelo import mapearOrdenado
from ..utilidades.validadores import validarEntero

registro = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReporteEnsayo:
    """
    Resultado de una corrida de ensayos aleatorios.

    Atributos:
        idLema: Identificador de la desigualdad
        ensayos: Número de ensayos
        violaciones: Ensayos con holgura < 1 − 1e−9
        holguraMinima: Menor holgura observada (∞ si no hubo ensayos)
        semillaPeor: Semilla del ensayo de menor holgura (None si no hubo ensayos)
        duracion: Tiempo de pared en segundos (no se serializa)
        parametros: Parámetros de la comprobación
    """
    idLema: str
    ensayos: int
    violaciones: int
    holguraMinima: float
    semillaPeor: Optional[int]
    duracion: float = 0.0
    parametros: Optional[Dict[str, Any]] = None

    @property
    def exito(self) -> bool:
        return self.violaciones == 0

    def aDiccionario(self) -> Dict[str, Any]:
        """
        Forma serializable del reporte.

        La duración queda fuera para que dos corridas iguales produzcan
        exactamente la misma salida; una holgura infinita se escribe como None.
        """
        return {
            "lemma_id": self.idLema,
            "trials": self.ensayos,
            "violations": self.violaciones,
            "min_slack": self.holguraMinima if math.isfinite(self.holguraMinima) else None,
            "worst_seed": self.semillaPeor,
            "parameters": dict(self.parametros or {}),
        }


def holguraInferior(lhs: float, cota: float) -> float:
    """Holgura de lhs ≥ cota como cociente lhs/cota (∞ si cota ≤ 0)."""
    if cota <= 0.0:
        return math.inf
    return max(lhs, 0.0) / cota


def holguraSuperior(valor: float, cota: float) -> float:
    """
    Holgura de valor ≤ cota como cociente cota/valor.

    valor = 0 cumple con holgura ∞ si cota > 0, y con holgura 1 si cota = 0.
    """
    if valor <= 0.0:
        return math.inf if cota > 0.0 else 1.0
    return cota / valor


def derivarSemilla(maestra: int, idLema: str, indice: int) -> int:
    """
    Semilla del ensayo `indice` de la comprobación `idLema`.

    Mezcla (maestra, crc32(idLema), indice) con SeedSequence; el resultado
    no depende de qué otros ensayos se hayan ejecutado antes.
    """
    maestra = validarEntero(maestra, 0, "semilla")
    indice = validarEntero(indice, 0, "indice")
    secuencia = np.random.SeedSequence([maestra, zlib.crc32(idLema.encode("utf-8")), indice])
    return int(secuencia.generate_state(1)[0])


def ejecutarComprobacion(comprobacion: ComprobacionDesigualdad,
                         ensayos: int,
                         semilla: int,
                         trabajadores: int = 1) -> ReporteEnsayo:
    """
    Ejecuta `ensayos` ensayos de una comprobación y agrega sus holguras.

    La agregación recorre los ensayos en orden de índice, de modo que la
    semilla peor es la de menor índice en caso de empate.

    Args:
        comprobacion: Instancia de ComprobacionDesigualdad
        ensayos: Número de ensayos (≥ 0)
        semilla: Semilla maestra (≥ 0)
        trabajadores: Hilos para los ensayos

    Returns:
        ReporteEnsayo
    """
    if not isinstance(comprobacion, ComprobacionDesigualdad):
        raise ErrorValidacion("comprobacion", "Se esperaba una ComprobacionDesigualdad")
    ensayos = validarEntero(ensayos, 0, "ensayos")
    semilla = validarEntero(semilla, 0, "semilla")

    idLema = comprobacion.idLema
    # Cada combinación de parámetros tiene su propio flujo de semillas
    semillas = [derivarSemilla(semilla, comprobacion.clave, i) for i in range(ensayos)]

    inicio = time.perf_counter()
    holguras = mapearOrdenado(comprobacion.ensayo, semillas, trabajadores)
    duracion = time.perf_counter() - inicio

    # NaN cuenta como violación
    violaciones = sum(1 for h in holguras if not h >= UMBRAL_HOLGURA)
    if holguras:
        peor = int(np.argmin(holguras))
        holguraMinima, semillaPeor = float(holguras[peor]), semillas[peor]
    else:
        holguraMinima, semillaPeor = math.inf, None

    reporte = ReporteEnsayo(
        idLema=idLema,
        ensayos=ensayos,
        violaciones=violaciones,
        holguraMinima=holguraMinima,
        semillaPeor=semillaPeor,
        duracion=duracion,
        parametros=comprobacion.describir(),
    )

    registro.info(
        "%s: %d ensayos, %d violaciones, holgura mínima %.6g (%.2f s)",
        comprobacion.clave, ensayos, violaciones, holguraMinima, duracion,
    )
    if violaciones:
        registro.warning("%s: %d violaciones, peor semilla %s", comprobacion.clave, violaciones, semillaPeor)

    return reporte
