from .chars import DirichletCharacter, character_from_label
from .coeffs import EisSpec, FourierSeries, eisenstein_coefficients, mock_coefficients
from .forms import UpperHalfPoint, GammaZeroElement, HarmonicMaassForm, assemble_harmonic, evaluate
from .config import PrecisionConfig
