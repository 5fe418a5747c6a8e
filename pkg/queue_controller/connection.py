from fakeredis import FakeStrictRedis
from redis import Redis
from redis.exceptions import ConnectionError as RedisConnectionError

from logger import Logger
from .config import RedisConfig


class RedisConnection:
    """
    Singleton class for the redis connection
    """

    _connection = None

    def __new__(cls):
        if cls._connection is None:
            connection = Redis(
                host=RedisConfig.HOST,
                port=RedisConfig.PORT,
                db=RedisConfig.DB,
                password=RedisConfig.PASSWORD,
            )

            # test connection
            try:
                connection.ping()
            except RedisConnectionError:
                logger = Logger().get_logger(name=cls.__name__)
                logger.error(
                    f"Cannot reach redis at {RedisConfig.HOST}:{RedisConfig.PORT}"
                )
                raise
            cls._connection = connection

        return cls._connection


class FakeRedisConnection:
    """
    Singleton in-process redis emulator, so every queue and worker of one
    process sees the same jobs
    """

    _connection = None

    def __new__(cls):
        if cls._connection is None:
            cls._connection = FakeStrictRedis()
        return cls._connection
