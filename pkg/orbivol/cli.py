"""
Interfaz de línea de comandos de Orbivol.

Uso:
    orbivol bound --n 3 --k 2                  # 𝒜(3,2) en log₁₀ y notación científica
    orbivol table --n-max 5 --k-max 6          # Rejilla de log₁₀ 𝒜(n,k)
    orbivol hurwitz --volume 10 --n 3 --k 7    # |G| ≤ Vol(M)/𝒜(n,k)
    orbivol constants --k 3 --r 1              # τ, c_k, κ(r) y volúmenes de bolas
    orbivol ball-volume --n 3 --r 1            # Vol B(e₁, r)
    orbivol verify --trials 1000 --seed 42     # Suite de verificación

Todas las órdenes aceptan --format {text,csv,json} y --output PATH. Los
códigos de salida son 0 (éxito), 1 (la verificación encontró violaciones),
2 (error de uso) y 3 (fallo interno de un cálculo).
"""

import contextlib
import logging
import math
from typing import Any, Dict, Iterator, List, Optional

import click

from . import __version__
from .cotas import (
    ConsultaCota,
    areaEsfera,
    calcularCota,
    cotaHurwitz,
    cotaHurwitzOut,
    estaSaturada,
    logCocienteHurwitz,
    logKappa,
    logVolumenBola,
    volumenBola,
)
from .cotas.optimizacion import LOG_10
from .cotas.volumen import LOG_MAXIMO_DOBLE
from .geometria import cadenaConstantes, constanteJorgensen, deltaCruce
from .nucleo.configuracion import MAX_CELDAS_TABLA
from .nucleo.excepciones import ErrorOrbivol, ErrorValidacion
from .utilidades import (
    aCsv,
    aJson,
    aTexto,
    configurarRegistro,
    validarDimension,
    validarOrden,
    validarPositivo,
)
from .utilidades.formato import FORMATOS
from .verificacion import ConfiguracionVerificacion, ejecutarTodo, exitoTotal

__all__ = [
    "orbivol",
]

registro = logging.getLogger(__name__)

ENCABEZADO_TABLA = ("n", "k", "log10_A", "r_star")
ENCABEZADO_VERIFICACION = ("lemma_id", "parameters", "trials", "violations", "min_slack", "worst_seed")


# ========== AUXILIARES ==========

def _opcionesSalida(funcion):
    """Añade --format y --output a una orden."""
    funcion = click.option(
        "--output", "salida",
        type=click.Path(dir_okay=False, writable=True),
        default=None,
        help="Escribe también la salida en este archivo (mismos bytes que stdout)",
    )(funcion)
    funcion = click.option(
        "--format", "formato",
        type=click.Choice(FORMATOS),
        default="text",
        show_default=True,
        help="Formato de salida",
    )(funcion)
    return funcion


class ErrorInterno(click.ClickException):
    """Fallo de la biblioteca que no se debe a los argumentos; sale con código 3."""
    exit_code = 3


@contextlib.contextmanager
def _erroresDeUso() -> Iterator[None]:
    """Traduce los errores de la biblioteca a errores de click."""
    try:
        yield
    except ErrorValidacion as error:
        raise click.UsageError(str(error), ctx=click.get_current_context(silent=True)) from error
    except ErrorOrbivol as error:
        registro.debug("Fallo interno en la orden", exc_info=True)
        raise ErrorInterno(str(error)) from error


def _documento(comando: str,
               entradas: Dict[str, Any],
               resultados: Dict[str, Any],
               semilla: Optional[int] = None,
               reportes: Optional[List[Dict[str, Any]]] = None) -> Dict[str, Any]:
    documento = {
        "command": comando,
        "inputs": entradas,
        "results": resultados,
        "version": __version__,
        "seed": semilla,
    }
    if reportes is not None:
        documento["reports"] = reportes
    return documento


def _renderizarCampos(formato: str,
                      documento: Dict[str, Any],
                      titulo: str,
                      notas: Optional[List[str]] = None) -> str:
    """Órdenes de un solo registro: una fila en CSV, pares campo/valor en texto."""
    resultados = documento["results"]
    if formato == "json":
        return aJson(documento)
    if formato == "csv":
        return aCsv(list(resultados), [list(resultados.values())])
    return aTexto(titulo, ["campo", "valor"], list(resultados.items()), notas)


def _emitir(texto: str, salida: Optional[str]) -> None:
    click.echo(texto, nl=False)
    if salida is not None:
        with open(salida, "w", encoding="utf-8", newline="") as archivo:
            archivo.write(texto)


def _textoParametros(parametros: Dict[str, Any]) -> str:
    return ";".join(f"{clave}={valor}" for clave, valor in parametros.items())


# ========== ÓRDENES ==========

@click.group()
@click.version_option(version=__version__, prog_name="orbivol")
@click.option("--verbose", "-v", "detallado", is_flag=True, help="Muestra diagnósticos en stderr")
def orbivol(detallado: bool) -> None:
    """
    Orbivol - Cotas explícitas de volumen para orbifolds hiperbólicos.

    Ejemplos:

        orbivol bound --n 3 --k 2

        orbivol verify --trials 1000 --seed 42 --format json
    """
    configurarRegistro(logging.DEBUG if detallado else logging.WARNING)


@orbivol.command()
@click.option("--n", "n", type=int, required=True, help="Dimensión (≥ 2)")
@click.option("--k", "k", type=int, required=True, help="Orden máximo de la torsión (≥ 2)")
@click.option("--workers", "trabajadores", type=int, default=1, show_default=True,
              help="Hilos para evaluar la malla de radios")
@_opcionesSalida
def bound(n: int, k: int, trabajadores: int, formato: str, salida: Optional[str]) -> None:
    """
    Calcula 𝒜(n,k), la cota inferior del volumen.
    """
    with _erroresDeUso():
        resultado = calcularCota(ConsultaCota(n, k), trabajadores=trabajadores)

    documento = _documento("bound", {"n": n, "k": k}, resultado.aDiccionario())
    _emitir(_renderizarCampos(formato, documento, f"𝒜({n},{k})"), salida)


@orbivol.command()
@click.option("--n-min", "nMin", type=int, default=2, show_default=True)
@click.option("--n-max", "nMax", type=int, default=4, show_default=True)
@click.option("--k-min", "kMin", type=int, default=2, show_default=True)
@click.option("--k-max", "kMax", type=int, default=4, show_default=True)
@click.option("--workers", "trabajadores", type=int, default=1, show_default=True)
@_opcionesSalida
def table(nMin: int, nMax: int, kMin: int, kMax: int,
          trabajadores: int, formato: str, salida: Optional[str]) -> None:
    """
    Tabula log₁₀ 𝒜(n,k) sobre una rejilla de dimensiones y órdenes.
    """
    with _erroresDeUso():
        nMin, nMax = validarDimension(nMin, "n-min"), validarDimension(nMax, "n-max")
        kMin, kMax = validarOrden(kMin, "k-min"), validarOrden(kMax, "k-max")
        if nMax < nMin:
            raise ErrorValidacion("n-max", f"n-max debe ser ≥ n-min, recibido: {nMax} < {nMin}")
        if kMax < kMin:
            raise ErrorValidacion("k-max", f"k-max debe ser ≥ k-min, recibido: {kMax} < {kMin}")

        celdas = (nMax - nMin + 1) * (kMax - kMin + 1)
        if celdas > MAX_CELDAS_TABLA:
            raise ErrorValidacion("rango", f"La tabla tendría {celdas} celdas; el máximo es {MAX_CELDAS_TABLA}")

        dimensiones = range(nMin, nMax + 1)
        ordenes = range(kMin, kMax + 1)
        resultados = [
            calcularCota(ConsultaCota(n, k), trabajadores=trabajadores)
            for n in dimensiones
            for k in ordenes
        ]

    entradas = {"n_min": nMin, "n_max": nMax, "k_min": kMin, "k_max": kMax}

    if formato == "json":
        documento = _documento("table", entradas, {"cells": [r.aDiccionario() for r in resultados]})
        texto = aJson(documento)
    elif formato == "csv":
        texto = aCsv(ENCABEZADO_TABLA, [(r.n, r.k, r.log10A, r.rEstrella) for r in resultados])
    else:
        porCelda = {(r.n, r.k): r.log10A for r in resultados}
        filas = [[n] + [porCelda[(n, k)] for k in ordenes] for n in dimensiones]
        texto = aTexto("log₁₀ 𝒜(n,k)", ["n"] + [f"k={k}" for k in ordenes], filas)

    _emitir(texto, salida)


@orbivol.command()
@click.option("--volume", "volumen", type=float, required=True, help="Volumen de la variedad (> 0)")
@click.option("--n", "n", type=int, required=True, help="Dimensión (≥ 2)")
@click.option("--k", "k", type=int, required=True, help="Orden máximo de la torsión (≥ 2)")
@click.option("--out", "variante", is_flag=True,
              help="Cota para Out(π₁(M)): usa 2·Vol(M)/𝒜(n,k)")
@_opcionesSalida
def hurwitz(volumen: float, n: int, k: int, variante: bool,
            formato: str, salida: Optional[str]) -> None:
    """
    Cota de tipo Hurwitz para grupos de isometrías de una variedad.
    """
    with _erroresDeUso():
        logBase = logCocienteHurwitz(volumen, n, k)
        cota = cotaHurwitzOut(volumen, n, k) if variante else cotaHurwitz(volumen, n, k)

    logCociente = logBase + math.log(2.0) if variante else logBase
    saturada = estaSaturada(cota)

    resultados = {
        "bound": cota,
        "saturated": saturada,
        "log_ratio": logCociente,
        "log10_A": (math.log(volumen) - logBase) / LOG_10,
        "variant": "out" if variante else "isometry",
    }
    notas = ["La cota supera 2⁶³; se informa el valor 2⁶³ como centinela."] if saturada else None

    documento = _documento("hurwitz", {"volume": volumen, "n": n, "k": k, "out": variante}, resultados)
    _emitir(_renderizarCampos(formato, documento, "Cota de Hurwitz", notas), salida)


@orbivol.command()
@click.option("--k", "k", type=int, default=None, help="Orden para c_k y su cadena de constantes")
@click.option("--r", "r", type=float, default=None, help="Radio para κ(r) y los volúmenes de bolas")
@_opcionesSalida
def constants(k: Optional[int], r: Optional[float], formato: str, salida: Optional[str]) -> None:
    """
    Constantes de la cota: τ, 2e⁻², c_k, κ(r) y volúmenes de bolas.
    """
    with _erroresDeUso():
        τ = constanteJorgensen()
        resultados: Dict[str, Any] = {
            "tau": τ,
            "tau_residual": abs(2.0 * τ * (1.0 + τ) ** 2 - 1.0),
            "tau_exceeds_0_2971": τ > 0.2971,
            "two_e_minus_2": 2.0 * math.exp(-2.0),
        }
        entradas: Dict[str, Any] = {"k": k, "r": r}

        if k is not None:
            cadena = cadenaConstantes(k)
            resultados.update({
                "k": cadena["k"],
                "c_k": cadena["ck"],
                "infimum": cadena["infimo"],
                "crossing_delta": deltaCruce(cadena["k"]),
                "chain_holds": (
                    cadena["tauMayorQue02971"]
                    and cadena["02971MayorQueDosEMenosDos"]
                    and cadena["dosEMenosDosCotaCk"]
                ),
            })

        if r is not None:
            r = validarPositivo(r, "r")
            logκ = logKappa(r)
            resultados.update({
                "r": r,
                "log_kappa": logκ,
                "kappa": math.exp(logκ) if logκ < LOG_MAXIMO_DOBLE else math.inf,
            })
            for n in (2, 3, 4):
                resultados[f"ball_volume_n{n}"] = volumenBola(n, r)

    documento = _documento("constants", entradas, resultados)
    _emitir(_renderizarCampos(formato, documento, "Constantes"), salida)


@orbivol.command("ball-volume")
@click.option("--n", "n", type=int, required=True, help="Dimensión (≥ 2)")
@click.option("--r", "r", type=float, required=True, help="Radio (≥ 0)")
@_opcionesSalida
def ballVolume(n: int, r: float, formato: str, salida: Optional[str]) -> None:
    """
    Volumen de la bola hiperbólica B(e₁, r) en ℍⁿ.
    """
    with _erroresDeUso():
        resultados = {
            "n": n,
            "r": r,
            "ball_volume": volumenBola(n, r),
            "log_ball_volume": logVolumenBola(n, r),
            "sphere_area": areaEsfera(n),
        }

    documento = _documento("ball-volume", {"n": n, "r": r}, resultados)
    _emitir(_renderizarCampos(formato, documento, f"Vol B(e₁, {r:g}) en ℍ^{n}"), salida)


@orbivol.command()
@click.option("--trials", "ensayos", type=int, default=10_000, show_default=True,
              help="Ensayos por combinación de parámetros")
@click.option("--seed", "semilla", type=int, default=0, show_default=True, help="Semilla maestra")
@click.option("--workers", "trabajadores", type=int, default=1, show_default=True,
              help="Hilos por comprobación (no altera los reportes)")
@_opcionesSalida
@click.pass_context
def verify(ctx: click.Context, ensayos: int, semilla: int, trabajadores: int,
           formato: str, salida: Optional[str]) -> None:
    """
    Ejecuta la suite de verificación; sale con código 1 si hay violaciones.
    """
    with _erroresDeUso():
        configuracion = ConfiguracionVerificacion(ensayos=ensayos, semilla=semilla, trabajadores=trabajadores)
        reportes = ejecutarTodo(configuracion)

    exito = exitoTotal(reportes)
    violaciones = sum(reporte.violaciones for reporte in reportes)
    diccionarios = [reporte.aDiccionario() for reporte in reportes]

    if formato == "json":
        resultados = {"checks": len(reportes), "violations": violaciones, "passed": exito}
        documento = _documento(
            "verify",
            {"trials": ensayos, "seed": semilla, "workers": trabajadores},
            resultados,
            semilla=semilla,
            reportes=diccionarios,
        )
        texto = aJson(documento)
    else:
        filas = [
            (d["lemma_id"], _textoParametros(d["parameters"]), d["trials"],
             d["violations"], d["min_slack"], d["worst_seed"])
            for d in diccionarios
        ]
        if formato == "csv":
            texto = aCsv(ENCABEZADO_VERIFICACION, filas)
        else:
            nota = "Sin violaciones." if exito else f"{violaciones} violaciones en total."
            texto = aTexto(f"Verificación (semilla {semilla})", ENCABEZADO_VERIFICACION, filas, [nota])

    _emitir(texto, salida)

    if not exito:
        ctx.exit(1)


if __name__ == "__main__":
    orbivol()
