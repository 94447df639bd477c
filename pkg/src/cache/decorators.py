"""
Cache decorator for pure computations
"""
import functools
import inspect
import logging
from typing import Any, Callable, Optional, Type

from pydantic import BaseModel

from .connection import get_redis
from .manager import CacheManager

logger = logging.getLogger(__name__)


def get_cache_manager() -> CacheManager:
    """Get cache manager instance"""
    return CacheManager(get_redis())


def cache_result(key_type: str, model: Optional[Type[BaseModel]] = None, ttl: Optional[int] = None):
    """
    Cache the result of a deterministic function by its bound arguments

    Args:
        key_type: Type of cache key (ramsey, optimizer, analysis, construction)
        model: pydantic model used to rebuild cached results
        ttl: Time to live in seconds
    """
    def decorator(func: Callable) -> Callable:
        signature = inspect.signature(func)

        @functools.wraps(func)
        def wrapper(*args, **kwargs) -> Any:
            cache_manager = get_cache_manager()

            if not cache_manager.enabled:
                return func(*args, **kwargs)

            bound = signature.bind(*args, **kwargs)
            bound.apply_defaults()
            params = {"function": func.__qualname__, **bound.arguments}

            cached_result = cache_manager.fetch(key_type, params)
            if cached_result is not None:
                logger.debug(f"Cache hit for {key_type}:{func.__qualname__}")
                return model.model_validate(cached_result) if model is not None else cached_result

            result = func(*args, **kwargs)
            cache_manager.store(key_type, params, result, ttl)
            logger.debug(f"Cached result for {key_type}:{func.__qualname__}")

            return result
        return wrapper
    return decorator
