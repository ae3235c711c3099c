"""
Torelli-laboratoriet - Johnson-homomorfismen, Birman-Craggs-Johnson-homomorfismen
och kedjeavbildningar för ytor av genus g med två randkomponenter
"""
__version__ = "0.1.0"
