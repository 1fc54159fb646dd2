"""Likelihood provider backed by an NLL server speaking the bridge wire
protocol: POST /v1/nll with {"text": ...}, response {"tokens", "nll",
"model_id"}."""

from __future__ import annotations

import httpx

from .scores import LikelihoodProfile


class RemoteProviderError(RuntimeError):
    pass


class RemoteProvider:
    name = "remote"

    def __init__(self, endpoint, client=None, timeout=30.0):
        self.endpoint = endpoint.rstrip("/")
        self._client = client or httpx.Client(timeout=timeout)

    def profile(self, text, sample_id=""):
        resp = self._client.post(self.endpoint + "/v1/nll", json={"text": text})
        if resp.status_code != 200:
            raise RemoteProviderError(
                f"nll request failed: HTTP {resp.status_code}: {resp.text[:200]}")
        body = resp.json()
        try:
            tokens = body["tokens"]
            nll = body["nll"]
            self.model_id = body["model_id"]
        except KeyError as e:
            raise RemoteProviderError(f"malformed response, missing {e}") from None
        return LikelihoodProfile(sample_id, tokens, nll)

    def health(self):
        resp = self._client.get(self.endpoint + "/healthz")
        if resp.status_code != 200:
            raise RemoteProviderError(f"healthz failed: HTTP {resp.status_code}")
        return resp.json()

    def close(self):
        self._client.close()
