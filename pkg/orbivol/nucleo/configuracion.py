"""
Constantes numéricas de Orbivol.

Todas las tolerancias y parámetros fijos de la biblioteca viven aquí,
para que los módulos de geometría, cotas y verificación compartan
exactamente los mismos umbrales.
"""

# ========== ESTRUCTURA ==========
# Invariantes estructurales (AᵀJA = J, ⟨x,x⟩ = −1, QᵀQ = I), error máximo por entrada
TOLERANCIA_ESTRUCTURAL = 1e-9

# |det(A)| = 1 para matrices de Lorentz
TOLERANCIA_DETERMINANTE = 1e-6

# Comparaciones relativas entre normas
TOLERANCIA_NORMA = 1e-9

# El argumento de arccosh se recorta a [1, ∞) solo si −⟨x,y⟩ ≥ 1 − este margen
MARGEN_ARCCOSH = 1e-6

# cosh(δ) desborda los dobles por encima de este valor
LIMITE_IMPULSO = 700.0

# ========== NORMA DE OPERADOR ==========
TOLERANCIA_VALOR_PROPIO = 1e-12
MAX_ITERACIONES_NORMA = 10_000

# Elevaciones al cuadrado mínimas antes de aceptar la convergencia (P ∝ G^{2^24})
MIN_ELEVACIONES_NORMA = 24

# ========== ELEMENTOS ELÍPTICOS ==========
# Distancia máxima por entrada entre A^m e I para declarar A^m = I
TOLERANCIA_IDENTIDAD = 1e-8

# Cada cuántas multiplicaciones se reortogonaliza la potencia acumulada
PERIODO_REORTOGONALIZACION = 16

# Valores singulares de A − I por debajo de este umbral cuentan como cero
UMBRAL_ESPACIO_FIJO = 1e-8

# δ por debajo de este umbral se trata como 0 (A fija e₁)
UMBRAL_DELTA_CERO = 1e-9

MAX_REINTENTOS_MUESTREO = 100

# ========== COTAS ==========
# Ventana de búsqueda del radio óptimo r*
RADIO_MINIMO = 1e-4
RADIO_MAXIMO = 60.0
PUNTOS_MALLA = 512
TOLERANCIA_RADIO = 1e-10

# Precisión relativa de la cuadratura de ∫ sinh^{n−1}
TOLERANCIA_CUADRATURA = 1e-12

# Las cotas de Hurwitz se saturan por encima de 2⁶³
SATURACION_HURWITZ = 2 ** 63

# Error relativo del cociente, en ulp por unidad del mayor logaritmo restado
ULPS_COCIENTE_HURWITZ = 8

# ========== VERIFICACIÓN ==========
# Un ensayo viola la desigualdad si su holgura cae por debajo de este valor
UMBRAL_HOLGURA = 1.0 - 1e-9

# Presupuesto máximo de (2q/s + 1)^p en el conteo de conjuntos separados
PRESUPUESTO_CONTEO = 1e6
DIMENSION_MAXIMA_CONTEO = 4

# ========== INTERFAZ DE LÍNEA DE COMANDOS ==========
MAX_CELDAS_TABLA = 10_000
CIFRAS_SIGNIFICATIVAS = 12
SENTINELA_SUBDESBORDAMIENTO = "underflow-sentinel"
