# src/config.py

import os
import logging
from dotenv import load_dotenv

load_dotenv()

# Logging configuration
logging.basicConfig(
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
    level=os.getenv('LOG_LEVEL', 'WARNING').upper()
)
logger = logging.getLogger(__name__)

# Base assets directory
ASSETS_DIR = os.getenv('ASSETS_DIR', os.path.join(os.path.dirname(__file__), '..', 'assets'))

# Golden P[4,3,5] in plain format
GOLDEN_TUPLE = (4, 3, 5)
GOLDEN_FIXTURE = os.getenv('GOLDEN_FIXTURE', os.path.join(ASSETS_DIR, 'dubrovnik_4_3_5.txt'))

# Result catalog
DATABASE_URL = os.getenv('DATABASE_URL', 'sqlite:///dubrovnik_catalog.db')

# ========== RESOURCE LIMITS ==========
MAX_TWIST_SUM = int(os.getenv('MAX_TWIST_SUM', '10000'))
CLOSED_FORM_MAX_LENGTH = int(os.getenv('CLOSED_FORM_MAX_LENGTH', '15'))

# Worker processes for batch files and sweeps (1 = sequential)
BATCH_WORKERS = int(os.getenv('BATCH_WORKERS', '1'))

# Engines and output styles
SKEIN = 'skein'
REDUCE = 'reduce'
CLOSED = 'closed'
ENGINE_NAMES = (SKEIN, REDUCE, CLOSED)
OUTPUT_FORMATS = ('plain', 'latex', 'json')

# Validate configuration
if MAX_TWIST_SUM < 1:
    raise ValueError("MAX_TWIST_SUM must be positive")

if BATCH_WORKERS < 1:
    logger.warning(f"BATCH_WORKERS={BATCH_WORKERS} is not positive, falling back to 1")
    BATCH_WORKERS = 1
