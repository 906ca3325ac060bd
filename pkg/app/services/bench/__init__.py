from .bench import BenchmarkService
