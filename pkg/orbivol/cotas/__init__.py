"""
Cotas de Orbivol - Volumen de bolas, empaquetamiento y 𝒜(n,k).
"""

# Imports locales
from .empaquetamiento import (
    logConteoEmpaquetamiento,
    logConteoEmpaquetamientoDirecto,
    logCosh,
    logKappa,
)
from .optimizacion import (
    ConsultaCota,
    ResultadoCota,
    calcularCota,
    cotaHurwitz,
    cotaHurwitzOut,
    estaSaturada,
    logCocienteHurwitz,
    logObjetivo,
    notacionCientifica,
)
from .volumen import (
    areaEsfera,
    integralSinhExacta,
    logAreaEsfera,
    logIntegralSinh,
    logSinh,
    logVolumenBola,
    volumenBola,
)

__all__ = [
    # Empaquetamiento
    "logConteoEmpaquetamiento",
    "logConteoEmpaquetamientoDirecto",
    "logCosh",
    "logKappa",
    # Optimización
    "ConsultaCota",
    "ResultadoCota",
    "calcularCota",
    "cotaHurwitz",
    "cotaHurwitzOut",
    "estaSaturada",
    "logCocienteHurwitz",
    "logObjetivo",
    "notacionCientifica",
    # Volumen
    "areaEsfera",
    "integralSinhExacta",
    "logAreaEsfera",
    "logIntegralSinh",
    "logSinh",
    "logVolumenBola",
    "volumenBola",
]
