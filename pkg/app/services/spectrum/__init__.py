from .spectrum import SpectrumService
