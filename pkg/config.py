"""
Configuration settings for the valuta workbench
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


class Config:
    """Base configuration class"""
    SECRET_KEY = os.getenv('SECRET_KEY', 'dev-key-change-in-production')

    # Working-size caps (ground-set size n)
    ENUMERATION_CAP = int(os.getenv('VALUTA_ENUMERATION_CAP', 6))
    ENUMERATION_HARD_CAP = 7
    TUTTE_CAP = int(os.getenv('VALUTA_TUTTE_CAP', 14))
    GINV_CAP = int(os.getenv('VALUTA_GINV_CAP', 12))
    STRESSED_CAP = int(os.getenv('VALUTA_STRESSED_CAP', 12))
    MINOR_SEARCH_CAP = int(os.getenv('VALUTA_MINOR_CAP', 10))
    ISOMORPHISM_CAP = int(os.getenv('VALUTA_ISOMORPHISM_CAP', 10))

    # Worker bound for batch computations
    THREADS = int(os.getenv('VALUTA_THREADS', 1))

    # Progress lines on stderr
    VERBOSE = os.getenv('VALUTA_VERBOSE', 'false').lower() == 'true'

    # Verification suite defaults
    VERIFY_SEED = 20240229
    VERIFY_RANDOM_SAMPLES = int(os.getenv('VALUTA_VERIFY_SAMPLES', 100))
    VERIFY_MAX_N = int(os.getenv('VALUTA_VERIFY_MAX_N', 6))
    FAMILY_MAX_N = int(os.getenv('VALUTA_FAMILY_MAX_N', 9))
    FORMULA_MAX_N = int(os.getenv('VALUTA_FORMULA_MAX_N', 9))

    # Application settings
    DEBUG = False
    TESTING = False


class DevelopmentConfig(Config):
    """Development configuration"""
    DEBUG = True
    VERBOSE = os.getenv('VALUTA_VERBOSE', 'true').lower() == 'true'


class ProductionConfig(Config):
    """Production configuration"""
    DEBUG = False
    TESTING = False

    # Security settings
    SECRET_KEY = os.getenv('SECRET_KEY', os.urandom(24).hex())

    # Performance settings
    WEB_CONCURRENCY = int(os.getenv('WEB_CONCURRENCY', 4))

    # Logging
    LOG_LEVEL = os.getenv('LOG_LEVEL', 'INFO')


class TestingConfig(Config):
    """Testing configuration"""
    TESTING = True
    DEBUG = True
    VERBOSE = False
    VERIFY_RANDOM_SAMPLES = 12


# Configuration mapping
config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': Config
}
