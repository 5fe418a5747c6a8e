import asyncio
import os

from config import GlobalConfig

from experiments.replicate_queue import ReplicateQueue

# setting GlobalConfig.DEBUG_MODE = True puts the replicate queue in synchronous mode
debug = False

if debug:
    GlobalConfig.DEBUG_MODE = True
    GlobalConfig.USE_FAKE_REDIS = False

    ReplicateQueue().run_worker()


workers = int(os.environ.get("PA_SECDEG_WORKERS", "4"))

# if not in debug then create a process for each worker and one for the API
commands = [
    "python -c 'from experiments.replicate_queue import ReplicateQueue; ReplicateQueue().run_worker();'"
] * workers + [
    "python -c \"import uvicorn; uvicorn.run('api.main:app')\"",
]


# create a subprocess for process listed above
async def main():
    processes = [await asyncio.create_subprocess_shell(cmd) for cmd in commands]
    outputs = [await process.wait() for process in processes]


if __name__ == "__main__":
    asyncio.run(main())
