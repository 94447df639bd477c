"""
Redis connection for the result cache
"""
import logging
from typing import Optional

import redis

from .config import CacheConfig

logger = logging.getLogger(__name__)

_client: Optional[redis.Redis] = None
_attempted = False


def get_redis() -> Optional[redis.Redis]:
    """Shared Redis client, or None when the server is unreachable"""
    global _client, _attempted
    if _attempted:
        return _client
    _attempted = True
    try:
        client = redis.from_url(
            CacheConfig.REDIS_URL,
            max_connections=CacheConfig.REDIS_MAX_CONNECTIONS,
            decode_responses=True,
        )
        client.ping()
        _client = client
        logger.info("Redis connection established successfully")
    except Exception as e:
        logger.warning(f"Redis connection failed: {e}. Result cache will be disabled.")
        _client = None
    return _client
