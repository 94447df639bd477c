"""
Cache module
Provides Redis-based result caching with TTL and invalidation logic
"""

from .manager import CacheManager
from .decorators import cache_result, get_cache_manager
from .connection import get_redis
from .config import CacheConfig

__all__ = [
    'CacheManager',
    'cache_result',
    'get_cache_manager',
    'get_redis',
    'CacheConfig'
]
